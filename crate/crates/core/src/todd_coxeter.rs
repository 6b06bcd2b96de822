//! Coset enumeration over the trivial subgroup.
//!
//! Felsch strategy: cosets are defined in order, and after every definition
//! the resulting deductions are scanned through every cyclic conjugate of
//! every relator that starts with the affected letter. Coincidences are
//! merged with a union-find queue. Scan order is fixed, so runs are
//! reproducible.

use std::fmt;

use thiserror::Error;

use crate::group::Group;
use crate::perm::{permutation_group, PermError, Permutation};

pub const DEFAULT_COSET_CAP: usize = 10_000;

const UNDEF: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("presentation has no generators")]
    NoGenerators,
    #[error("presentation has no relators")]
    NoRelators,
    #[error("relator {index} is empty")]
    EmptyRelator { index: usize },
    #[error("relator {index} uses generator {generator} but only {count} exist")]
    BadLetter { index: usize, generator: usize, count: usize },
    #[error("cannot parse relator {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("coset enumeration exceeded {cap} cosets")]
    CosetCapExceeded { cap: usize },
    #[error("enumerated order {got}, expected {expected}")]
    OrderMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A word letter: generator `g` is `g + 1`, its inverse is `-(g + 1)`.
pub type Letter = i32;

/// A finite presentation `<x_0..x_{k-1} | relators>`.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    pub relators: Vec<Vec<Letter>>,
    pub expected_order: Option<usize>,
    names: Vec<String>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.names.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            for (j, &l) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                let name = &self.names[l.unsigned_abs() as usize - 1];
                if l < 0 {
                    write!(f, "{name}^-1")?;
                } else {
                    write!(f, "{name}")?;
                }
            }
        }
        write!(f, ">")
    }
}

impl Presentation {
    pub fn new(
        generator_count: usize,
        relators: Vec<Vec<Letter>>,
        expected_order: Option<usize>,
    ) -> Result<Self, PresentationError> {
        if generator_count == 0 {
            return Err(PresentationError::NoGenerators);
        }
        if relators.is_empty() {
            return Err(PresentationError::NoRelators);
        }
        for (index, r) in relators.iter().enumerate() {
            if r.is_empty() {
                return Err(PresentationError::EmptyRelator { index });
            }
            for &l in r {
                let generator = l.unsigned_abs() as usize;
                if l == 0 || generator > generator_count {
                    return Err(PresentationError::BadLetter { index, generator, count: generator_count });
                }
            }
        }
        let names = (0..generator_count)
            .map(|i| if i < 26 { ((b'a' + i as u8) as char).to_string() } else { format!("x{i}") })
            .collect();
        Ok(Self { generator_count, relators, expected_order, names })
    }

    /// Parses relations written over named generators, e.g.
    /// `parse(&["a", "b"], &["a^8", "b^2", "b a b = a^3"], Some(16))`.
    /// A relation `u = v` becomes the relator `u v^-1`. Terms are separated
    /// by whitespace or `*`; each term is a generator name with an optional
    /// integer exponent.
    pub fn parse(
        generators: &[&str],
        relations: &[&str],
        expected_order: Option<usize>,
    ) -> Result<Self, PresentationError> {
        let parse_side = |text: &str, side: &str| -> Result<Vec<Letter>, PresentationError> {
            let err = |reason: String| PresentationError::Parse { text: text.to_string(), reason };
            let mut word = Vec::new();
            for term in side.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
                let (name, exp) = match term.split_once('^') {
                    Some((n, e)) => (n, e.parse::<i32>().map_err(|_| err(format!("bad exponent in {term:?}")))?),
                    None => (term, 1),
                };
                let g = generators
                    .iter()
                    .position(|&x| x == name)
                    .ok_or_else(|| err(format!("unknown generator {name:?}")))?;
                let letter = if exp < 0 { -(g as i32 + 1) } else { g as i32 + 1 };
                word.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
            }
            Ok(word)
        };
        let mut relators = Vec::new();
        for &rel in relations {
            let mut word = match rel.split_once('=') {
                Some((lhs, rhs)) => {
                    let mut w = parse_side(rel, lhs)?;
                    w.extend(parse_side(rel, rhs)?.iter().rev().map(|&l| -l));
                    w
                }
                None => parse_side(rel, rel)?,
            };
            free_reduce(&mut word);
            if !word.is_empty() {
                relators.push(word);
            }
        }
        let mut p = Self::new(generators.len(), relators, expected_order)?;
        p.names = generators.iter().map(|s| s.to_string()).collect();
        Ok(p)
    }
}

fn free_reduce(word: &mut Vec<Letter>) {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word.iter() {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    // cyclic reduction
    let mut start = 0;
    let mut end = out.len();
    while end - start >= 2 && out[start] == -out[end - 1] {
        start += 1;
        end -= 1;
    }
    *word = out[start..end].to_vec();
}

/// Column index of a letter: `2g` for the generator, `2g + 1` for its inverse.
#[inline]
fn col(l: Letter) -> usize {
    let g = l.unsigned_abs() as usize - 1;
    if l > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

#[inline]
fn inv_col(c: usize) -> usize {
    c ^ 1
}

struct Enumerator {
    cols: usize,
    table: Vec<Vec<usize>>,
    /// Union-find parent; `forward[c] == c` iff coset `c` is live.
    forward: Vec<usize>,
    deductions: Vec<(usize, usize)>,
    /// For each column, cyclic conjugates (as column sequences) starting there.
    conjugates: Vec<Vec<Vec<usize>>>,
    cap: usize,
}

impl Enumerator {
    fn new(p: &Presentation, cap: usize) -> Self {
        let cols = 2 * p.generator_count;
        let mut conjugates = vec![Vec::new(); cols];
        let mut seen = std::collections::HashSet::new();
        for r in &p.relators {
            let fwd: Vec<usize> = r.iter().map(|&l| col(l)).collect();
            let bwd: Vec<usize> = r.iter().rev().map(|&l| col(-l)).collect();
            for w in [fwd, bwd] {
                for s in 0..w.len() {
                    let rot: Vec<usize> = w[s..].iter().chain(&w[..s]).copied().collect();
                    if seen.insert(rot.clone()) {
                        conjugates[rot[0]].push(rot);
                    }
                }
            }
        }
        Self { cols, table: vec![vec![UNDEF; cols]], forward: vec![0], deductions: Vec::new(), conjugates, cap }
    }

    fn live(&self, c: usize) -> bool {
        self.forward[c] == c
    }

    fn find(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.forward[root] != root {
            root = self.forward[root];
        }
        while self.forward[c] != root {
            let next = self.forward[c];
            self.forward[c] = root;
            c = next;
        }
        root
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), PresentationError> {
        if self.table.len() >= self.cap {
            return Err(PresentationError::CosetCapExceeded { cap: self.cap });
        }
        let d = self.table.len();
        self.table.push(vec![UNDEF; self.cols]);
        self.forward.push(d);
        self.table[c][x] = d;
        self.table[d][inv_col(x)] = c;
        self.deductions.push((c, x));
        Ok(())
    }

    /// Scans `w` at coset `c`. Closes a single gap with a deduction, or
    /// reports a coincidence when the scan completes inconsistently.
    fn scan(&mut self, c: usize, w: &[usize]) {
        let n = w.len();
        let (mut f, mut i) = (c, 0);
        while i < n && self.table[f][w[i]] != UNDEF {
            f = self.table[f][w[i]];
            i += 1;
        }
        if i == n {
            if f != c {
                self.coincidence(f, c);
            }
            return;
        }
        let (mut b, mut j) = (c, n);
        while j > i && self.table[b][inv_col(w[j - 1])] != UNDEF {
            b = self.table[b][inv_col(w[j - 1])];
            j -= 1;
        }
        if j < i {
            unreachable!("backward scan passed forward scan");
        } else if j == i {
            if f != b {
                self.coincidence(f, b);
            }
        } else if j == i + 1 {
            self.table[f][w[i]] = b;
            self.table[b][inv_col(w[i])] = f;
            self.deductions.push((f, w[i]));
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = std::collections::VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(e) = queue.pop_front() {
            for x in 0..self.cols {
                let f = self.table[e][x];
                if f == UNDEF {
                    continue;
                }
                let xi = inv_col(x);
                self.table[f][xi] = UNDEF;
                let e1 = self.find(e);
                let f1 = self.find(f);
                if self.table[e1][x] != UNDEF {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][xi] != UNDEF {
                    let t = self.table[f1][xi];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][xi] = e1;
                    self.deductions.push((e1, x));
                }
            }
        }
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut std::collections::VecDeque<usize>) {
        let a = self.find(a);
        let b = self.find(b);
        if a == b {
            return;
        }
        let (keep, lose) = if a < b { (a, b) } else { (b, a) };
        self.forward[lose] = keep;
        queue.push_back(lose);
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if self.live(c) {
                let ws = std::mem::take(&mut self.conjugates[x]);
                for w in &ws {
                    self.scan(c, w);
                    if !self.live(c) {
                        break;
                    }
                }
                self.conjugates[x] = ws;
            }
            let c = self.find(c);
            let d = self.table[c][x];
            if d != UNDEF {
                let d = self.find(d);
                let ix = inv_col(x);
                let ws = std::mem::take(&mut self.conjugates[ix]);
                for w in &ws {
                    self.scan(d, w);
                    if !self.live(d) {
                        break;
                    }
                }
                self.conjugates[ix] = ws;
            }
        }
    }

    fn run(&mut self) -> Result<(), PresentationError> {
        let mut c = 0;
        while c < self.table.len() {
            for x in 0..self.cols {
                if !self.live(c) {
                    break;
                }
                if self.table[c][x] == UNDEF {
                    self.define(c, x)?;
                    self.process_deductions();
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Permutation action of each generator on the live cosets, renumbered
    /// in order.
    fn generator_permutations(&self) -> Vec<Permutation> {
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.live(c)).collect();
        let mut renum = vec![UNDEF; self.table.len()];
        for (i, &c) in live.iter().enumerate() {
            renum[c] = i;
        }
        (0..self.cols / 2)
            .map(|g| {
                let images = live.iter().map(|&c| renum[self.table[c][2 * g]]).collect();
                Permutation::from_images(images).expect("complete coset table is a permutation")
            })
            .collect()
    }
}

/// Enumerates the cosets of the trivial subgroup and returns the action of
/// each generator on them (the regular representation).
pub fn enumerate_cosets(p: &Presentation, cap: usize) -> Result<(usize, Vec<Permutation>), PresentationError> {
    let mut e = Enumerator::new(p, cap);
    e.run()?;
    let perms = e.generator_permutations();
    let degree = perms.first().map_or(1, |q| q.degree());
    Ok((degree, perms))
}

pub fn presented_group(p: &Presentation) -> Result<Group, PresentationError> {
    presented_group_capped(p, DEFAULT_COSET_CAP)
}

pub fn presented_group_capped(p: &Presentation, cap: usize) -> Result<Group, PresentationError> {
    let (degree, perms) = enumerate_cosets(p, cap)?;
    if let Some(expected) = p.expected_order {
        if expected != degree {
            return Err(PresentationError::OrderMismatch { expected, got: degree });
        }
    }
    let g = permutation_group(degree, &perms)?;
    // The regular action is faithful and transitive.
    debug_assert_eq!(g.order(), degree);
    Ok(g)
}
