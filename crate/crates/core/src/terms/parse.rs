use crate::error::{Error, Result};
use crate::lists::IdList;

use super::{Basic, Term};

#[derive(Debug, PartialEq)]
enum Tok {
    Open,
    Close,
    Atom(String),
}

fn tokens(text: &str) -> Vec<Tok> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        if ch == '(' || ch == ')' || ch.is_whitespace() {
            if !cur.is_empty() {
                out.push(Tok::Atom(std::mem::take(&mut cur)));
            }
            match ch {
                '(' => out.push(Tok::Open),
                ')' => out.push(Tok::Close),
                _ => {}
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(Tok::Atom(cur));
    }
    out
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl Parser {
    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn expect_open(&mut self) -> Result<()> {
        match self.next() {
            Some(Tok::Open) => Ok(()),
            _ => Err(err("expected `(`")),
        }
    }

    fn atom(&mut self) -> Result<String> {
        match self.next() {
            Some(Tok::Atom(a)) => Ok(a.clone()),
            _ => Err(err("expected an identifier")),
        }
    }

    /// Identifiers up to and including the closing parenthesis.
    fn atoms_to_close(&mut self) -> Result<IdList> {
        let mut out = Vec::new();
        loop {
            match self.next() {
                Some(Tok::Atom(a)) => out.push(a.clone()),
                Some(Tok::Close) => return Ok(out),
                _ => return Err(err("expected an identifier or `)`")),
            }
        }
    }

    fn tagged_list(&mut self, tag: &str) -> Result<IdList> {
        self.expect_open()?;
        if self.atom()? != tag {
            return Err(err(format!("expected `({tag} ...)`")));
        }
        self.atoms_to_close()
    }

    fn term(&mut self) -> Result<Term> {
        self.expect_open()?;
        let head = self.atom()?;
        let t = match head.as_str() {
            "basic" => {
                let name = self.atom()?;
                let w = self.tagged_list("w")?;
                let e = self.tagged_list("e")?;
                self.close()?;
                Term::Basic(Basic { name, w, e })
            }
            "unit" => return Ok(Term::Unit(self.atoms_to_close()?)),
            "box" | "vcomp" | "hcomp" => {
                let l = self.term()?;
                let r = self.term()?;
                self.close()?;
                match head.as_str() {
                    "box" => Term::boxed(l, r),
                    "vcomp" => Term::vcomp(l, r),
                    _ => Term::hcomp(l, r),
                }
            }
            other => return Err(err(format!("unknown term former `{other}`"))),
        };
        Ok(t)
    }

    fn close(&mut self) -> Result<()> {
        match self.next() {
            Some(Tok::Close) => Ok(()),
            _ => Err(err("expected `)`")),
        }
    }
}

/// Reads a term in prefix notation, e.g.
/// `(box (basic p (w a) (e b)) (basic q (w b) (e c)))`.
pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser { toks: tokens(text), pos: 0 };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return Err(err("trailing input after term"));
    }
    Ok(t)
}
