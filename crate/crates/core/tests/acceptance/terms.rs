//! The four term calculi: axioms against the interpretations, exhaustively
//! on small terms and on random larger ones.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use juncta::edge_graph::EdgeGraph;
use juncta::geometry::mgraph::mu;
use juncta::pgraph::find_construction;
use juncta::terms::axioms::instances;
use juncta::terms::interp::{eta_star, iota, term_of_construction, EtaStar};
use juncta::terms::translate::{t1, t2};
use juncta::terms::{eq_terms, type_check, Basic, Calculus, Term};
use juncta::{fixtures, gen, Caps};

use crate::{ensure, ok, Check};

const UNIVERSE: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
const LEAVES: usize = 3;
/// Edges of a basic leaf, both sides together.
const BASIC: usize = 3;
const UNIT_LEN: usize = 2;
const RANDOM: usize = 500;
const SEED: u64 = 0x5eed;

/// Extra atoms a closure may pass through, where units can appear along
/// a derivation. `s1` closures grow too fast for any; the comparison of
/// classes still holds without them on these samples.
fn slack(calc: Calculus) -> usize {
    match calc {
        Calculus::SBox | Calculus::SBoxP | Calculus::S1 => 0,
        Calculus::S2 => 1,
    }
}

/// Leaves whose edges continue a first-occurrence numbering that has used
/// `k` edges so far, with the new count.
fn leaves(k: usize, calc: Calculus) -> Vec<(Term, usize)> {
    fn lists(len: usize, k: usize, taken: &[usize], out: &mut Vec<(Vec<usize>, usize)>, cur: &mut Vec<usize>) {
        if cur.len() == len {
            out.push((cur.clone(), k));
            return;
        }
        for x in 0..=k.min(UNIVERSE.len() - 1) {
            if cur.contains(&x) || taken.contains(&x) {
                continue;
            }
            cur.push(x);
            lists(len, k.max(x + 1), taken, out, cur);
            cur.pop();
        }
    }
    let word = |l: &[usize]| l.iter().map(|&i| UNIVERSE[i]).collect::<Vec<_>>();
    let sorted = |l: &[usize]| l.windows(2).all(|w| w[0] < w[1]);
    let mut out = Vec::new();
    for wl in 1..BASIC {
        for el in 1..=BASIC - wl {
            let mut ws = Vec::new();
            lists(wl, k, &[], &mut ws, &mut vec![]);
            for (w, k1) in ws {
                let mut es = Vec::new();
                lists(el, k1, &w, &mut es, &mut vec![]);
                for (e, k2) in es {
                    if calc == Calculus::SBox && !(sorted(&w) && sorted(&e)) {
                        continue;
                    }
                    let (w, e) = (word(&w), word(&e));
                    let name = format!("p{}_{}", w.concat(), e.concat());
                    out.push((Term::basic(&name, &w, &e), k2));
                }
            }
        }
    }
    if matches!(calc, Calculus::S1 | Calculus::S2) {
        for len in 0..=UNIT_LEN {
            let mut us = Vec::new();
            lists(len, k, &[], &mut us, &mut vec![]);
            out.extend(us.into_iter().map(|(l, k1)| (Term::unit(&word(&l)), k1)));
        }
    }
    out
}

/// Every typed term with `n` leaves in `calc`, numbering edges from `k`,
/// paired with the final count. Subterms of terms are terms, so operands
/// are typed before they are combined.
fn trees(n: usize, k: usize, calc: Calculus, memo: &mut HashMap<(usize, usize), Vec<(Term, usize)>>) -> Vec<(Term, usize)> {
    if let Some(v) = memo.get(&(n, k)) {
        return v.clone();
    }
    let mut out = Vec::new();
    if n == 1 {
        out = leaves(k, calc).into_iter().filter(|(t, _)| type_check(t, calc).is_ok()).collect();
    } else {
        let ops: &[fn(Term, Term) -> Term] =
            if calc == Calculus::S2 { &[Term::vcomp, Term::hcomp] } else { &[Term::boxed] };
        for left in 1..n {
            for (l, k1) in trees(left, k, calc, memo) {
                for (r, k2) in trees(n - left, k1, calc, memo) {
                    for op in ops {
                        let t = op(l.clone(), r.clone());
                        if type_check(&t, calc).is_ok() {
                            out.push((t, k2));
                        }
                    }
                }
            }
        }
    }
    memo.insert((n, k), out.clone());
    out
}

fn samples(calc: Calculus) -> Vec<Term> {
    let mut memo = HashMap::new();
    (1..=LEAVES).flat_map(|n| trees(n, 0, calc, &mut memo)).map(|(t, _)| t).collect()
}

/// The interpretation `eq_terms` decides by, with the type, as a key.
fn key(t: &Term, calc: Calculus) -> Result<String, String> {
    let ty = ok(type_check(t, calc), "type")?;
    let meaning = match calc {
        Calculus::SBox | Calculus::SBoxP => format!("{:?}", ok(iota(t, calc), "iota")?),
        Calculus::S1 => format!("{:?}", ok(eta_star(t), "eta*")?),
        Calculus::S2 => format!("{:?}", ok(juncta::geometry::mgraph::mu_star(t), "mu*")?),
    };
    Ok(format!("{ty:?} {meaning}"))
}

struct Classes {
    ids: HashMap<Term, usize>,
    parent: Vec<usize>,
}

impl Classes {
    fn id(&mut self, t: &Term) -> (usize, bool) {
        if let Some(&i) = self.ids.get(t) {
            return (i, false);
        }
        let i = self.parent.len();
        self.parent.push(i);
        self.ids.insert(t.clone(), i);
        (i, true)
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.parent[a.max(b)] = a.min(b);
    }
}

/// Rewriting classes against interpretation classes, over every term the
/// bounded closures of the samples reach.
fn completeness(calc: Calculus, samples: &[Term]) -> Result<String, String> {
    let mut classes = Classes { ids: HashMap::new(), parent: Vec::new() };
    for s in samples {
        let (root, new) = classes.id(s);
        if !new {
            continue;
        }
        let bound = s.atom_count() + slack(calc);
        let mut queue = VecDeque::from([s.clone()]);
        while let Some(t) = queue.pop_front() {
            let (i, _) = classes.id(&t);
            for (_, r) in ok(instances(&t, calc), "instances")? {
                if r.atom_count() > bound {
                    continue;
                }
                let (j, new) = classes.id(&r);
                classes.union(i, j);
                if new {
                    queue.push_back(r);
                }
            }
            debug_assert_eq!(classes.find(i), classes.find(root));
        }
    }
    let terms: Vec<(Term, usize)> = classes.ids.iter().map(|(t, &i)| (t.clone(), i)).collect();
    let mut by_key: BTreeMap<String, Vec<(usize, &Term)>> = BTreeMap::new();
    for (t, i) in &terms {
        by_key.entry(key(t, calc)?).or_default().push((*i, t));
    }
    let mut class_key: BTreeMap<usize, &String> = BTreeMap::new();
    for (k, members) in &by_key {
        let first = classes.find(members[0].0);
        for &(i, t) in members {
            ensure!(classes.find(i) == first, "{calc}: {} and {} are equal but not derivably so", members[0].1, t);
            ensure!(ok(eq_terms(members[0].1, t, calc), "eq_terms")?, "{calc}: eq_terms rejects {} = {t}", members[0].1);
        }
        if let Some(other) = class_key.insert(first, k) {
            ensure!(other == k, "{calc}: a derivation joins terms that are not equal");
        }
    }
    Ok(format!("{calc}: {} samples, {} terms in {} classes", samples.len(), terms.len(), by_key.len()))
}

/// P-terms of the generated P-graphs, then random walks along the axioms.
fn random_terms(calc: Calculus, rng: &mut StdRng) -> Result<Vec<Term>, String> {
    let caps = Caps::default();
    let mut seeds = Vec::new();
    for d in ok(gen::gen(3, 7), "generator")? {
        if let Some(k) = ok(find_construction(&d, &caps), "construction")? {
            let t = ok(term_of_construction(&k, &|v| format!("p_{v}")), "P-term")?;
            seeds.push(if calc == Calculus::S2 { ok(t2(&t), "t2")? } else { t });
        }
    }
    let mut out = Vec::with_capacity(RANDOM);
    while out.len() < RANDOM {
        let mut t = seeds[rng.gen_range(0..seeds.len())].clone();
        for _ in 0..rng.gen_range(0..6) {
            let next = ok(instances(&t, calc), "instances")?;
            if next.is_empty() {
                break;
            }
            t = next[rng.gen_range(0..next.len())].1.clone();
        }
        out.push(t);
    }
    Ok(out)
}

fn soundness(calc: Calculus, terms: &[Term]) -> Result<usize, String> {
    let mut checked = 0;
    for t in terms {
        for (inst, r) in ok(instances(t, calc), "instances")? {
            ensure!(ok(eq_terms(t, &r, calc), "eq_terms")?, "{calc}: {:?} at {:?} changes the meaning of {t}", inst.axiom, inst.path);
            checked += 1;
        }
    }
    Ok(checked)
}

fn round_trips(calc: Calculus, terms: &[Term]) -> Result<usize, String> {
    let mut checked = 0;
    for t in terms {
        let back = match calc {
            Calculus::S2 => ok(t1(t).and_then(|u| t2(&u)), "t2 t1")?,
            _ if type_check(t, Calculus::S1).is_ok() => ok(t2(t).and_then(|u| t1(&u)), "t1 t2")?,
            _ => continue,
        };
        let home = if calc == Calculus::S2 { Calculus::S2 } else { Calculus::S1 };
        ensure!(ok(eq_terms(&back, t, home), "eq_terms")?, "{t} does not come back from translation: {back}");
        checked += 1;
    }
    Ok(checked)
}

/// `η*(γ′)` as drawn: the edge-graph written out by its blocks and pairs.
fn gamma_prime_drawn() -> EtaStar {
    let s = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let edges = s(&["a1", "a2", "a3", "a4", "a5", "a6", "a7", "b1", "b2", "b3", "b4", "b5", "c1", "c2"]);
    let w_blocks = [s(&["b1", "b2", "b3", "b4"]), s(&["c1", "c2"])];
    let e_blocks = [s(&["a1", "a2", "a3"]), s(&["b3", "b4", "a4"])];
    let mut p = Vec::new();
    for a in ["a1", "a2", "a3"] {
        for b in ["b1", "b2", "b3", "b4"] {
            p.push((a.to_string(), b.to_string()));
        }
    }
    for a in ["b3", "b4", "a4"] {
        for c in ["c1", "c2"] {
            p.push((a.to_string(), c.to_string()));
        }
    }
    p.push(("a6".into(), "b5".into()));
    EtaStar {
        eta: EdgeGraph::new(edges, &w_blocks, &e_blocks, &p).expect("drawn edge-graph is valid"),
        rho: BTreeSet::from([
            Basic::new("beta1", &["a1", "a2", "a3"], &["b1", "b2", "b3", "b4"]),
            Basic::new("beta2", &["b3", "b4", "a4"], &["c1", "c2"]),
            Basic::new("beta3", &["a6"], &["b5"]),
        ]),
        lw: s(&["a1", "a2", "a3", "a4", "a5", "a6", "a7"]),
        le: s(&["b1", "b2", "c1", "c2", "a5", "b5", "a7"]),
    }
}

/// Three basics in a column, and the same column with the middle edges
/// exchanged: `μ` agrees, the basics do not.
fn rho_pair() -> (Term, Term) {
    let column = |names: [&str; 3], mid: [&str; 2]| {
        Term::vcomp(
            Term::vcomp(Term::basic(names[0], &["a"], &[mid[0]]), Term::basic(names[1], &[mid[0]], &[mid[1]])),
            Term::basic(names[2], &[mid[1]], &["d"]),
        )
    };
    (column(["beta1", "beta2", "beta3"], ["b", "c"]), column(["beta1p", "beta2p", "beta3p"], ["c", "b"]))
}

pub fn suite() -> Check {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut report = Vec::new();
    let (mut sound, mut trips) = (0, 0);
    for calc in Calculus::ALL {
        let small = samples(calc);
        report.push(completeness(calc, &small)?);
        let random = random_terms(calc, &mut rng)?;
        sound += soundness(calc, &random)?;
        trips += round_trips(calc, &small)? + round_trips(calc, &random)?;
    }
    let got = ok(eta_star(&fixtures::gamma_prime()), "eta*(gamma')")?;
    ensure!(got == gamma_prime_drawn(), "eta*(gamma') = {got:?}");
    let (t, u) = rho_pair();
    ensure!(ok(mu(&t), "mu")? == ok(mu(&u), "mu")?, "the column pair differs under mu");
    ensure!(!ok(eq_terms(&t, &u, Calculus::S2), "eq_terms")?, "the column pair is reported equal");
    Ok(format!("{}; {sound} axiom instances, {trips} round trips", report.join(", ")))
}
