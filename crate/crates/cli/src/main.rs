//! `juncta`: command-line access to the library.
//!
//! Graph and term arguments are bundled fixture names or file paths; terms
//! may also be given inline as s-expressions. Lists are whitespace-separated
//! in one argument, with `x1..x9` expanding to `x1 x2 ... x9`.
//!
//! Exit codes: 0 success or predicate true, 1 predicate false, 2 input
//! error, 3 resource cap.

mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use juncta::format::{graph_to_value, print_graph};
use juncta::geometry::{closure, disk, dual, emit, mgraph};
use juncta::grounding::{self, Mode};
use juncta::pgraph::{self, Construction, Method};
use juncta::pivots::{self, MoveKind, PivotTree};
use juncta::terms::{self, interp, normal, translate, Calculus, Term};
use juncta::{juncture, Caps, Error, Graph, Side};

use input::{list, load_graph, load_term, parse_side, vertex};

#[derive(Parser)]
#[command(name = "juncta", version, about = "Juncture, grounding, P-graphs, term calculi and disk realizations")]
struct Cli {
    /// Cap overrides, `semipaths=N,inner_edges=N,perm=N`; applied after JUNCTA_CAPS.
    #[arg(long, global = true)]
    caps: Option<String>,
    #[arg(long, global = true)]
    max_semipaths: Option<usize>,
    #[arg(long, global = true)]
    max_inner_edges: Option<usize>,
    #[arg(long, global = true)]
    max_perm: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the graph canonically; exit 1 unless it is a D-graph.
    Validate { graph: String },
    /// Report vertex and edge classes and the graph predicates.
    Classify { graph: String },
    /// Semipaths from U to V, or from U to the SIDE-vertices.
    Semipaths {
        graph: String,
        u: String,
        v: Option<String>,
        #[arg(long)]
        side: Option<String>,
    },
    /// The juncture of two D-graphs.
    Juncture { west: String, east: String },
    /// Cut through a cocycle given as a list of edges.
    Cut { graph: String, edges: String },
    /// All cocycles.
    Cocycles { graph: String },
    /// ψ_X(v, u, w).
    Psi { graph: String, side: String, v: String, u: String, w: String },
    /// Check a list of X-vertices for groundedness, or list them all.
    Grounded {
        graph: String,
        side: String,
        list: Option<String>,
        #[arg(long)]
        first: bool,
    },
    /// Grounded compatible lists for a juncture, if any.
    PCompatible { west: String, east: String },
    IsPgraph {
        graph: String,
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// A construction tree, if the graph is a P-graph.
    Construction { graph: String },
    /// The pivots of X, or of every vertex.
    Pivots {
        graph: String,
        x: Option<String>,
        #[arg(long, default_value = "W")]
        side: String,
    },
    Corolla { graph: String, v: String },
    Petal { graph: String, v: String, x: String },
    /// Closest common pivot.
    Ccp { graph: String, x: String, y: String },
    PivotWitness { graph: String, x: String, y: String, z: String },
    /// μ_Θ(Π) for grounded lists of E-vertices.
    Mu {
        graph: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        theta: String,
    },
    /// One P-move with --move, otherwise the whole sequence from Π to Θ.
    Pmoves {
        graph: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        theta: String,
        #[arg(long = "move")]
        kind: Option<String>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
    },
    /// Type of a term; exit 1 on a type error.
    TermCheck {
        term: String,
        #[arg(long, default_value = "s1")]
        calculus: String,
    },
    TermEq {
        left: String,
        right: String,
        #[arg(long, default_value = "s1")]
        calculus: String,
    },
    TermIota {
        term: String,
        #[arg(long, default_value = "s1")]
        calculus: String,
    },
    TermEta { term: String },
    TermMu {
        term: String,
        #[arg(long)]
        svg: Option<String>,
    },
    Translate {
        term: String,
        #[arg(long)]
        to: String,
    },
    Develop { term: String },
    NormalForm {
        term: String,
        #[arg(long, default_value = "W")]
        side: String,
    },
    /// Disk realization of a P-graph, or of μ for a P2-term.
    Realize {
        input: String,
        #[arg(long)]
        svg: Option<String>,
        #[arg(long)]
        dot: Option<String>,
    },
    Faces { input: String },
    CocycleOrder { graph: String, edges: String },
    /// Edge classes and the dual of the closed realization.
    Dual { input: String },
    /// The abstract source-sink closure.
    Closure { graph: String },
    /// The D1-interior of a D1'-graph.
    Interior { graph: String },
    Augment { graph: String },
    /// Whether μ of a term, or a graph with poles and paths, is an M-graph.
    MgraphCheck { input: String },
    /// Canonical D-graphs with at most N inner vertices and M edges.
    Gen {
        #[arg(long)]
        inner: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        count: bool,
    },
}

/// What a command produced: text to print and the exit status.
struct Out {
    text: String,
    ok: bool,
}

impl Out {
    fn done(text: impl Into<String>) -> Out {
        Out { text: text.into(), ok: true }
    }

    fn verdict(text: impl Into<String>, ok: bool) -> Out {
        Out { text: text.into(), ok }
    }
}

type Res = juncta::Result<Out>;

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn names(g: &Graph, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| g.vertex_name(v).to_string()).collect()
}

fn edge_names(g: &Graph, es: &[usize]) -> Vec<String> {
    es.iter().map(|&a| g.edge_name(a).to_string()).collect()
}

fn construction_value(k: &Construction) -> Value {
    let mut v = json!({ "lw": k.lw, "le": k.le });
    match &k.parts {
        None => v["leaf"] = graph_to_value(&k.graph),
        Some(p) => {
            v["west"] = construction_value(&p.0);
            v["east"] = construction_value(&p.1);
        }
    }
    v
}

fn realization_value(r: &disk::DiskRealization) -> Value {
    let orders: serde_json::Map<String, Value> =
        r.orders().into_iter().map(|(v, (ins, outs))| (v, json!({ "ins": ins, "outs": outs }))).collect();
    json!({ "graph": graph_to_value(&r.graph), "lw": r.lw, "le": r.le, "orders": orders })
}

fn mgraph_value(m: &mgraph::MGraph) -> Value {
    json!({ "graph": graph_to_value(&m.graph), "north": m.north, "south": m.south, "west": m.west, "east": m.east })
}

fn edge_graph_value(h: &juncta::EdgeGraph) -> Value {
    json!({ "edges": h.edges(), "w_blocks": h.w_blocks(), "e_blocks": h.e_blocks(), "p": h.p_pairs() })
}

fn realize_graph(d: &Graph, caps: &Caps) -> juncta::Result<Option<disk::DiskRealization>> {
    match pgraph::find_construction(d, caps)? {
        Some(k) => disk::realize(&k).map(Some),
        None => Ok(None),
    }
}

/// A realization of a D-graph, or of μ for a term (P1-terms are translated
/// first).
fn realization(input: &str, caps: &Caps) -> juncta::Result<Option<disk::DiskRealization>> {
    if let Some(t) = load_term(input)? {
        let t = if terms::type_check(&t, Calculus::S2).is_ok() { t } else { translate::t2(&t)? };
        return mgraph::realize_mu(&t);
    }
    realize_graph(&load_graph(input)?, caps)
}

fn write_file(path: &str, text: &str) -> juncta::Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))
}

fn run(cmd: Cmd, caps: &Caps) -> Res {
    match cmd {
        Cmd::Validate { graph } => {
            let g = load_graph(&graph)?;
            Ok(Out::verdict(print_graph(&g), g.is_dgraph()))
        }
        Cmd::Classify { graph } => {
            let g = load_graph(&graph)?;
            let c = g.classify();
            let vs: serde_json::Map<String, Value> =
                (0..g.vertex_count()).map(|v| (g.vertex_name(v).to_string(), json!(format!("{:?}", c.vertex_class[v])))).collect();
            let es: serde_json::Map<String, Value> = (0..g.edge_count())
                .map(|a| {
                    let class = json!({
                        "class": format!("{:?}", c.edge_class[a]),
                        "w_functional": c.w_functional[a],
                        "e_functional": c.e_functional[a],
                    });
                    (g.edge_name(a).to_string(), class)
                })
                .collect();
            Ok(Out::done(pretty(&json!({
                "vertices": vs,
                "edges": es,
                "acyclic": c.acyclic,
                "weakly_connected": c.weakly_connected,
                "w_e_functional": c.w_e_functional,
                "incidented": c.incidented,
                "has_inner_vertex": c.has_inner_vertex,
                "has_loop": c.has_loop,
                "dgraph": g.is_dgraph(),
            }))))
        }
        Cmd::Semipaths { graph, u, v, side } => {
            let g = load_graph(&graph)?;
            let u = vertex(&g, &u)?;
            let paths = match (v, side) {
                (Some(v), None) => g.semipaths(u, vertex(&g, &v)?, caps.semipaths)?,
                (None, Some(x)) => g.semipaths_to_side(u, parse_side(&x)?, caps.semipaths)?,
                _ => return Err(Error::Parse("give either a target vertex or --side".into())),
            };
            let mut text = String::new();
            for p in &paths {
                let mut line = g.vertex_name(p.vertices[0]).to_string();
                for i in 0..p.len() {
                    let arrow = if p.forward[i] { "->" } else { "<-" };
                    line += &format!(" {arrow}{} {}", g.edge_name(p.edges[i]), g.vertex_name(p.vertices[i + 1]));
                }
                text += &line;
                text.push('\n');
            }
            text += &format!("{} semipaths\n", paths.len());
            Ok(Out::done(text))
        }
        Cmd::Juncture { west, east } => Ok(Out::done(print_graph(&juncture::juncture(&load_graph(&west)?, &load_graph(&east)?)?))),
        Cmd::Cut { graph, edges } => {
            let g = load_graph(&graph)?;
            let c = juncture::edge_indices(&g, &list(&edges))?;
            let (w, e) = juncture::cut_through(&g, &c)?;
            Ok(Out::done(pretty(&json!({ "west": graph_to_value(&w), "east": graph_to_value(&e) }))))
        }
        Cmd::Cocycles { graph } => {
            let g = load_graph(&graph)?;
            let cs = juncture::enumerate_cocycles(&g, caps)?;
            Ok(Out::done(cs.iter().map(|c| edge_names(&g, c).join(" ") + "\n").collect::<String>()))
        }
        Cmd::Psi { graph, side, v, u, w } => {
            let g = load_graph(&graph)?;
            let holds = grounding::psi(&g, parse_side(&side)?, vertex(&g, &v)?, vertex(&g, &u)?, vertex(&g, &w)?, caps)?;
            Ok(Out::verdict(format!("{holds}\n"), holds))
        }
        Cmd::Grounded { graph, side, list: l, first } => {
            let g = load_graph(&graph)?;
            let x = parse_side(&side)?;
            match l {
                Some(l) => {
                    let holds = grounding::is_grounded(&g, x, &list(&l), caps)?;
                    Ok(Out::verdict(format!("{holds}\n"), holds))
                }
                None => {
                    let mode = if first { Mode::First } else { Mode::All };
                    let ls = grounding::grounded_lists(&g, x, mode, caps)?;
                    Ok(Out::verdict(ls.iter().map(|l| l.join(" ") + "\n").collect::<String>(), !ls.is_empty()))
                }
            }
        }
        Cmd::PCompatible { west, east } => match grounding::p_compatible(&load_graph(&west)?, &load_graph(&east)?, caps)? {
            Some(w) => Ok(Out::done(pretty(&json!({ "west": w.west, "east": w.east, "unified": w.unified })))),
            None => Ok(Out::verdict("not P-compatible\n", false)),
        },
        Cmd::IsPgraph { graph, method } => {
            let v = pgraph::is_pgraph(&load_graph(&graph)?, Method::parse(&method)?, caps)?;
            let mut text = String::new();
            for (name, r) in [("p1", v.p1), ("p2", v.p2), ("p3", v.p3)] {
                if let Some(r) = r {
                    text += &format!("{name}: {}\n", if r { "yes" } else { "no" });
                }
            }
            Ok(Out::verdict(text, v.holds()))
        }
        Cmd::Construction { graph } => match pgraph::find_construction(&load_graph(&graph)?, caps)? {
            Some(k) => Ok(Out::done(pretty(&construction_value(&k)))),
            None => Ok(Out::verdict("no construction\n", false)),
        },
        Cmd::Pivots { graph, x, side } => {
            let g = load_graph(&graph)?;
            let side = parse_side(&side)?;
            let xs = match x {
                Some(x) => vec![vertex(&g, &x)?],
                None => (0..g.vertex_count()).collect(),
            };
            let mut text = String::new();
            for x in xs {
                let ps = pivots::pivots(&g, side, x, caps)?;
                text += &format!("{}: {}\n", g.vertex_name(x), names(&g, ps).join(" "));
            }
            Ok(Out::done(text))
        }
        Cmd::Corolla { graph, v } => {
            let g = load_graph(&graph)?;
            Ok(Out::done(names(&g, pivots::corolla(&g, vertex(&g, &v)?, caps)?).join(" ") + "\n"))
        }
        Cmd::Petal { graph, v, x } => {
            let g = load_graph(&graph)?;
            Ok(Out::done(names(&g, pivots::petal(&g, vertex(&g, &v)?, vertex(&g, &x)?, caps)?).join(" ") + "\n"))
        }
        Cmd::Ccp { graph, x, y } => {
            let g = load_graph(&graph)?;
            match pivots::ccp(&g, vertex(&g, &x)?, vertex(&g, &y)?, caps)? {
                Some(v) => Ok(Out::done(format!("{}\n", g.vertex_name(v)))),
                None => Ok(Out::verdict("no common pivot\n", false)),
            }
        }
        Cmd::PivotWitness { graph, x, y, z } => {
            let g = load_graph(&graph)?;
            let [x, y, z] = [&x, &y, &z].map(|n| vertex(&g, n));
            match pivots::pivot_witness(&g, x?, y?, z?, caps)? {
                Some(v) => Ok(Out::done(format!("{}\n", g.vertex_name(v)))),
                None => Ok(Out::verdict("no witness\n", false)),
            }
        }
        Cmd::Mu { graph, pi, theta } => {
            let g = load_graph(&graph)?;
            let tree = PivotTree::new(&g, Side::W, caps)?;
            Ok(Out::done(format!("{}\n", pivots::mu(&g, &tree, &list(&pi), &list(&theta))?)))
        }
        Cmd::Pmoves { graph, pi, theta, kind, x, y } => {
            let g = load_graph(&graph)?;
            let (pi, theta) = (list(&pi), list(&theta));
            let tree = PivotTree::new(&g, Side::W, caps)?;
            let moves = match (kind, x, y) {
                (Some(k), Some(x), Some(y)) => {
                    vec![pivots::apply_pmove(&g, &tree, &pi, &theta, MoveKind::parse(&k)?, &x, &y, caps)?]
                }
                (None, None, None) => pivots::pmove_sequence(&g, &pi, &theta, caps)?,
                _ => return Err(Error::Parse("--move needs --x and --y".into())),
            };
            let mut text = format!("{} mu={}\n", pi.join(" "), pivots::mu(&g, &tree, &pi, &theta)?);
            for m in &moves {
                let at = m.pivot.as_ref().map(|v| format!(" at {v}")).unwrap_or_default();
                let mu = pivots::mu(&g, &tree, &m.lower, &theta)?;
                text += &format!("{:?}-({},{}){at}: {} mu={mu}\n", m.kind, m.x, m.y, m.lower.join(" "));
            }
            Ok(Out::done(text))
        }
        Cmd::TermCheck { term, calculus } => {
            let t = input::require_term(&term)?;
            match terms::type_check(&t, Calculus::parse(&calculus)?) {
                Ok(ty) => Ok(Out::done(pretty(&json!({
                    "w": ty.w, "e": ty.e, "a": ty.a, "lw": ty.lw, "le": ty.le,
                })))),
                Err(Error::Type(msg)) => Ok(Out::verdict(format!("type error: {msg}\n"), false)),
                Err(e) => Err(e),
            }
        }
        Cmd::TermEq { left, right, calculus } => {
            let (l, r) = (input::require_term(&left)?, input::require_term(&right)?);
            let holds = terms::eq_terms(&l, &r, Calculus::parse(&calculus)?)?;
            Ok(Out::verdict(format!("{holds}\n"), holds))
        }
        Cmd::TermIota { term, calculus } => {
            Ok(Out::done(print_graph(&interp::iota(&input::require_term(&term)?, Calculus::parse(&calculus)?)?)))
        }
        Cmd::TermEta { term } => {
            let s = interp::eta_star(&input::require_term(&term)?)?;
            let rho: Vec<String> = s.rho.iter().map(|b| Term::Basic(b.clone()).to_string()).collect();
            Ok(Out::done(pretty(&json!({ "eta": edge_graph_value(&s.eta), "rho": rho, "lw": s.lw, "le": s.le }))))
        }
        Cmd::TermMu { term, svg } => {
            let s = mgraph::mu_star(&input::require_term(&term)?)?;
            if let Some(path) = svg {
                write_file(&path, &emit::emit_svg_mgraph(&s.mu)?)?;
            }
            let rho: Vec<String> = s.rho.iter().map(|b| Term::Basic(b.clone()).to_string()).collect();
            Ok(Out::done(pretty(&json!({ "mu": mgraph_value(&s.mu), "rho": rho }))))
        }
        Cmd::Translate { term, to } => {
            let t = input::require_term(&term)?;
            let out = match Calculus::parse(&to)? {
                Calculus::S1 => translate::t1(&t)?,
                Calculus::S2 => translate::t2(&t)?,
                other => return Err(Error::Parse(format!("cannot translate to {other}"))),
            };
            Ok(Out::done(format!("{out}\n")))
        }
        Cmd::Develop { term } => Ok(Out::done(format!("{}\n", normal::develop(&input::require_term(&term)?)?))),
        Cmd::NormalForm { term, side } => {
            let f = normal::border_normal_form(&input::require_term(&term)?, parse_side(&side)?, caps)?;
            Ok(Out::done(format!("{}\n", f.to_term())))
        }
        Cmd::Realize { input, svg, dot } => {
            let Some(r) = realization(&input, caps)? else {
                return Ok(Out::verdict("no realization\n", false));
            };
            if let Some(path) = svg {
                write_file(&path, &emit::emit_svg(&r)?)?;
            }
            if let Some(path) = dot {
                write_file(&path, &emit::emit_dot(&r.graph))?;
            }
            Ok(Out::done(pretty(&realization_value(&r))))
        }
        Cmd::Faces { input } => {
            let Some(r) = realization(&input, caps)? else {
                return Ok(Out::verdict("no realization\n", false));
            };
            Ok(Out::done(pretty(&serde_json::to_value(disk::faces(&r)?).expect("faces serialize"))))
        }
        Cmd::CocycleOrder { graph, edges } => {
            let g = load_graph(&graph)?;
            let Some(r) = realize_graph(&g, caps)? else {
                return Ok(Out::verdict("no realization\n", false));
            };
            let c = juncture::edge_indices(&g, &list(&edges))?;
            Ok(Out::done(disk::cocycle_order(&r, &c)?.join(" ") + "\n"))
        }
        Cmd::Dual { input } => {
            let Some(r) = realization(&input, caps)? else {
                return Ok(Out::verdict("no realization\n", false));
            };
            let r = if closure::is_d1p_graph(&r.graph) { r } else { closure::ssc(&r)? };
            let classes = dual::classify_d1p_edges(&r)?;
            let d = dual::dual(&r)?;
            Ok(Out::done(pretty(&json!({
                "closed": graph_to_value(&r.graph),
                "classes": serde_json::to_value(&classes).expect("classes serialize"),
                "dual": realization_value(&d),
            }))))
        }
        Cmd::Closure { graph } => Ok(Out::done(print_graph(&closure::abstract_ssc(&load_graph(&graph)?)?))),
        Cmd::Interior { graph } => Ok(Out::done(print_graph(&closure::d1_interior(&load_graph(&graph)?)?))),
        Cmd::Augment { graph } => Ok(Out::done(print_graph(&juncture::source_sink_augment(&load_graph(&graph)?)?))),
        Cmd::MgraphCheck { input } => {
            let m = match load_term(&input)? {
                Some(t) => mgraph::mu(&t)?,
                None => input::load_mgraph(&input)?,
            };
            let holds = mgraph::is_mgraph(&m, caps)?;
            Ok(Out::verdict(format!("{holds}\n"), holds))
        }
        Cmd::Gen { inner, edges, count } => {
            let gs = juncta::gen::gen(inner, edges)?;
            if count {
                return Ok(Out::done(format!("{}\n", gs.len())));
            }
            let lines: Vec<String> = gs.iter().map(|g| graph_to_value(g).to_string() + "\n").collect();
            Ok(Out::done(lines.concat()))
        }
    }
}

fn caps_of(cli: &Cli) -> juncta::Result<Caps> {
    let mut caps = Caps::from_env()?;
    if let Some(spec) = &cli.caps {
        caps = caps.with_overrides(spec)?;
    }
    caps.semipaths = cli.max_semipaths.unwrap_or(caps.semipaths);
    caps.inner_edges = cli.max_inner_edges.unwrap_or(caps.inner_edges);
    caps.perm = cli.max_perm.unwrap_or(caps.perm);
    Ok(caps)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = caps_of(&cli).and_then(|caps| run(cli.cmd, &caps));
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::Cap(_)) { 3 } else { 2 })
        }
    }
}
