use std::fmt;

use crate::exactq::{one, parse_rational, Rational};

use super::OperadElement;

/// Planar rooted tree with generator-decorated vertices and labelled leaves.
/// `Leaf(1)` on its own is the tree with no vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf(usize),
    Node { op: String, children: Vec<Tree> },
}

impl Tree {
    pub fn node(op: &str, children: Vec<Tree>) -> Tree {
        Tree::Node {
            op: op.to_string(),
            children,
        }
    }

    pub fn corolla(op: &str, n: usize) -> Tree {
        Tree::node(op, (1..=n).map(Tree::Leaf).collect())
    }

    pub fn arity(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node { children, .. } => children.iter().map(Tree::arity).sum(),
        }
    }

    /// Leaf labels in planar order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf(l) => out.push(*l),
            Tree::Node { children, .. } => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node { children, .. } => 1 + children.iter().map(Tree::vertex_count).sum::<usize>(),
        }
    }

    /// Leaf labels form a bijection onto `1..=n`.
    pub fn has_valid_leaves(&self) -> bool {
        let l = self.leaves();
        let mut seen = vec![false; l.len()];
        l.iter().all(|&x| {
            x >= 1 && x <= seen.len() && !std::mem::replace(&mut seen[x - 1], true)
        })
    }

    /// Replaces each leaf `w` by `f(w)`.
    pub fn substitute(&self, f: &dyn Fn(usize) -> Tree) -> Tree {
        match self {
            Tree::Leaf(w) => f(*w),
            Tree::Node { op, children } => Tree::Node {
                op: op.clone(),
                children: children.iter().map(|c| c.substitute(f)).collect(),
            },
        }
    }

    pub fn relabel(&self, f: &dyn Fn(usize) -> usize) -> Tree {
        self.substitute(&|w| Tree::Leaf(f(w)))
    }

    pub fn shift(&self, by: usize) -> Tree {
        self.relabel(&|w| w + by)
    }

    /// `self ∘_i g` on single trees.
    pub fn graft(&self, i: usize, g: &Tree) -> Tree {
        let m = g.arity();
        self.substitute(&|w| {
            if w < i {
                Tree::Leaf(w)
            } else if w == i {
                g.shift(i - 1)
            } else {
                Tree::Leaf(w + m - 1)
            }
        })
    }

    pub fn parse(s: &str) -> Result<Tree, ParseTreeError> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let t = p.tree()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(t)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(l) => write!(f, "leaf{l}"),
            Tree::Node { op, children } => {
                write!(f, "{op}(")?;
                for (k, c) in children.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseTreeError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseTreeError {
        ParseTreeError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn ident(&mut self) -> Result<String, ParseTreeError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a name"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn tree(&mut self) -> Result<Tree, ParseTreeError> {
        let name = self.ident()?;
        if let Some(n) = name.strip_prefix("leaf") {
            if let Ok(l) = n.parse::<usize>() {
                return Ok(Tree::Leaf(l));
            }
        }
        if !self.eat(b'(') {
            return Err(self.err("expected '('"));
        }
        let mut children = vec![self.tree()?];
        while self.eat(b',') {
            children.push(self.tree()?);
        }
        if !self.eat(b')') {
            return Err(self.err("expected ')' or ','"));
        }
        Ok(Tree::Node { op: name, children })
    }
}

/// `[-] [c*]tree {(+|-) [c*]tree}`.
pub(super) fn parse_element(s: &str) -> Result<OperadElement, ParseTreeError> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let mut terms: Vec<(Tree, Rational)> = Vec::new();
    let mut negative = p.eat(b'-');
    loop {
        p.skip_ws();
        // optional rational coefficient followed by '*'
        let save = p.pos;
        let mut coeff = one();
        let start = p.pos;
        while p.pos < p.s.len() && (p.s[p.pos].is_ascii_digit() || p.s[p.pos] == b'/') {
            p.pos += 1;
        }
        if p.pos > start {
            let text = std::str::from_utf8(&p.s[start..p.pos]).unwrap_or_default();
            if p.eat(b'*') {
                coeff = parse_rational(text).map_err(|e| p.err(&e.to_string()))?;
            } else {
                p.pos = save;
            }
        }
        let t = p.tree()?;
        terms.push((t, if negative { -coeff } else { coeff }));
        if p.eat(b'+') {
            negative = false;
        } else if p.eat(b'-') {
            negative = true;
        } else {
            break;
        }
    }
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    let arity = terms[0].0.arity();
    OperadElement::from_terms(arity, terms).map_err(|e| ParseTreeError {
        pos: 0,
        msg: e.to_string(),
    })
}
