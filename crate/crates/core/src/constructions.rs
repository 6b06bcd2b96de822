//! Named group families and the textual group-spec language.
//!
//! Grammar (ASCII, whitespace-insensitive):
//!
//! ```text
//! spec := atom | "prod(" spec ("," spec)+ ")" | "quotZ(" spec ")"
//! atom := "C(" n ")" | "D(" m ")" | "SD(" n ")" | "T(" n ")" | "V(" n ")"
//!       | "U(" n "," m ")" | "S(" n ")" | "A(" n ")" | "EA(" p "," k ")"
//!       | "Hol(" n ")" | "sdp(" n "," p "," k ")" | "R" | "G21"
//!       | "PSL2(" q ")" | "Heis(" p ")"
//! ```
//!
//! Subscripts denote group orders: `D(m)` is the dihedral group **of order
//! m** (symmetries of an m/2-gon), `SD(n)` has order 8n, `T(n)` order 4n,
//! `V(n)` order 8n and `U(n,m)` order 2nm. `EA(p,k)` is `(Z_p)^k`,
//! `sdp(n,p,k)` is `Z_n ⋊ Z_p` with the generator of `Z_p` acting by
//! `x -> x^k`, `R = sdp(5,4,2)`, `G21 = sdp(7,3,2)` and `Heis(p)` is the
//! Heisenberg group of order p^3.

use std::fmt;

use thiserror::Error;

use crate::centralizers::center;
use crate::group::{AssocCheck, Group, GroupError, DEFAULT_ELEMENT_CAP};
use crate::perm::{permutation_group, PermError, Permutation};
use crate::todd_coxeter::{presented_group, Presentation, PresentationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family}: {reason}")]
    BadParameter { family: &'static str, reason: String },
    #[error("sdp({n},{p},{k}): x -> x^{k} does not define an action of Z_{p} on Z_{n}")]
    BadAction { n: usize, p: usize, k: usize },
    #[error("group order {order} exceeds element cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

fn bad(family: &'static str, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::BadParameter { family, reason: reason.into() }
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(base: usize, exp: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    for _ in 0..exp {
        acc = acc * base % m;
    }
    acc
}

fn power_labels(order: usize) -> Vec<String> {
    (0..order)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        })
        .collect()
}

pub fn cyclic(n: usize) -> Result<Group, ConstructionError> {
    if n == 0 {
        return Err(bad("C", "order must be at least 1"));
    }
    if n > DEFAULT_ELEMENT_CAP {
        return Err(ConstructionError::OrderCapExceeded { order: n, cap: DEFAULT_ELEMENT_CAP });
    }
    let flat = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
    Ok(Group::from_flat(n, flat, Some(power_labels(n)), AssocCheck::Inherited)?)
}

/// Dihedral group of order `m` (m even, m >= 4).
pub fn dihedral(m: usize) -> Result<Group, ConstructionError> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(bad("D", format!("order must be even and at least 4, got {m}")));
    }
    if m > DEFAULT_ELEMENT_CAP {
        return Err(ConstructionError::OrderCapExceeded { order: m, cap: DEFAULT_ELEMENT_CAP });
    }
    let k = m / 2;
    // element i + k*s is r^i s^s
    let mut flat = Vec::with_capacity(m * m);
    for a in 0..m {
        let (i, s) = (a % k, a / k);
        for b in 0..m {
            let (j, t) = (b % k, b / k);
            let rot = if s == 0 { (i + j) % k } else { (i + k - j) % k };
            flat.push((rot + k * ((s + t) % 2)) as u32);
        }
    }
    let labels = (0..m)
        .map(|a| match (a % k, a / k) {
            (0, 0) => "e".to_string(),
            (i, 0) => format!("r^{i}"),
            (0, _) => "s".to_string(),
            (i, _) => format!("r^{i}s"),
        })
        .collect();
    Ok(Group::from_flat(m, flat, Some(labels), AssocCheck::Inherited)?)
}

fn presented(gens: &[&str], rels: &[String], expected: usize) -> Result<Group, ConstructionError> {
    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
    let p = Presentation::parse(gens, &rels, Some(expected))?;
    Ok(presented_group(&p)?)
}

/// `SD_8n = <a, b | a^4n = b^2 = e, bab = a^(2n-1)>`, order 8n.
pub fn semidihedral(n: usize) -> Result<Group, ConstructionError> {
    if n < 2 {
        return Err(bad("SD", "n must be at least 2"));
    }
    presented(&["a", "b"], &[format!("a^{}", 4 * n), "b^2".into(), format!("b a b = a^{}", 2 * n - 1)], 8 * n)
}

/// `T_4n = <a, b | a^2n = e, a^n = b^2, b^-1 a b = a^-1>`, order 4n.
pub fn dicyclic(n: usize) -> Result<Group, ConstructionError> {
    if n < 2 {
        return Err(bad("T", "n must be at least 2"));
    }
    presented(&["a", "b"], &[format!("a^{}", 2 * n), format!("a^{n} = b^2"), "b^-1 a b = a^-1".into()], 4 * n)
}

/// `V_8n = <a, b | a^2n = b^4 = e, aba = b^-1, ab^-1a = b>`, order 8n.
pub fn v_group(n: usize) -> Result<Group, ConstructionError> {
    if n < 1 {
        return Err(bad("V", "n must be at least 1"));
    }
    presented(&["a", "b"], &[format!("a^{}", 2 * n), "b^4".into(), "a b a = b^-1".into(), "a b^-1 a = b".into()], 8 * n)
}

/// `U_2(n,m) = <a, b | a^2n = b^m = e, aba^-1 = b^-1>`, order 2nm.
pub fn u_group(n: usize, m: usize) -> Result<Group, ConstructionError> {
    if n < 1 || m < 1 {
        return Err(bad("U", "n and m must be at least 1"));
    }
    presented(&["a", "b"], &[format!("a^{}", 2 * n), format!("b^{m}"), "a b a^-1 = b^-1".into()], 2 * n * m)
}

/// Heisenberg group of upper unitriangular 3x3 matrices over `Z_p`.
pub fn heisenberg(p: usize) -> Result<Group, ConstructionError> {
    if !is_prime(p) {
        return Err(bad("Heis", format!("{p} is not prime")));
    }
    presented(
        &["a", "b", "c"],
        &[
            format!("a^{p}"),
            format!("b^{p}"),
            format!("c^{p}"),
            "a^-1 b^-1 a b = c".into(),
            "a c = c a".into(),
            "b c = c b".into(),
        ],
        p * p * p,
    )
}

pub fn symmetric(n: usize) -> Result<Group, ConstructionError> {
    if n == 0 {
        return Err(bad("S", "degree must be at least 1"));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
        let cycle: Vec<usize> = (0..n).collect();
        gens.push(Permutation::from_cycles(n, &[&cycle])?);
    }
    Ok(permutation_group(n, &gens)?)
}

pub fn alternating(n: usize) -> Result<Group, ConstructionError> {
    if n == 0 {
        return Err(bad("A", "degree must be at least 1"));
    }
    let gens = (0..n.saturating_sub(2))
        .map(|i| Permutation::from_cycles(n, &[&[i, i + 1, i + 2]]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(permutation_group(n, &gens)?)
}

/// `(Z_p)^k`
pub fn elem_abelian(p: usize, k: usize) -> Result<Group, ConstructionError> {
    if !is_prime(p) {
        return Err(bad("EA", format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(bad("EA", "rank must be at least 1"));
    }
    let order = (0..k).try_fold(1usize, |acc, _| acc.checked_mul(p)).unwrap_or(usize::MAX);
    if order > DEFAULT_ELEMENT_CAP {
        return Err(ConstructionError::OrderCapExceeded { order, cap: DEFAULT_ELEMENT_CAP });
    }
    let add = |mut a: usize, mut b: usize| {
        let (mut out, mut place) = (0, 1);
        for _ in 0..k {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out as u32
    };
    let flat = (0..order).flat_map(|a| (0..order).map(move |b| add(a, b))).collect();
    Ok(Group::from_flat(order, flat, None, AssocCheck::Inherited)?)
}

/// Affine maps `x -> ax + b` of `Z_n` with `a` a unit, as permutations.
pub fn holomorph_cyclic(n: usize) -> Result<Group, ConstructionError> {
    if n < 2 {
        return Err(bad("Hol", "n must be at least 2"));
    }
    let mut gens = vec![Permutation::from_images((0..n).map(|x| (x + 1) % n).collect()).expect("translation")];
    for a in 2..n {
        if gcd(a, n) == 1 {
            gens.push(Permutation::from_images((0..n).map(|x| a * x % n).collect()).expect("unit"));
        }
    }
    Ok(permutation_group(n, &gens)?)
}

/// `Z_n ⋊ Z_p` on pairs `(i, j)` with `(i1, j1)(i2, j2) = (i1 + k^j1 i2, j1 + j2)`.
/// `p` need not be prime; the action only has to satisfy `k^p = 1 mod n`.
pub fn sdp_cyclic(n: usize, p: usize, k: usize) -> Result<Group, ConstructionError> {
    if n == 0 || p == 0 {
        return Err(bad("sdp", "n and p must be at least 1"));
    }
    if gcd(k % n, n) != 1 && n > 1 || pow_mod(k, p, n) != 1 % n {
        return Err(ConstructionError::BadAction { n, p, k });
    }
    let order = n * p;
    if order > DEFAULT_ELEMENT_CAP {
        return Err(ConstructionError::OrderCapExceeded { order, cap: DEFAULT_ELEMENT_CAP });
    }
    let powers: Vec<usize> = (0..p).map(|j| pow_mod(k, j, n)).collect();
    let mut flat = Vec::with_capacity(order * order);
    for a in 0..order {
        let (i1, j1) = (a % n, a / n);
        for b in 0..order {
            let (i2, j2) = (b % n, b / n);
            let i = (i1 + powers[j1] * i2) % n;
            let j = (j1 + j2) % p;
            flat.push((i + n * j) as u32);
        }
    }
    let labels = (0..order)
        .map(|a| match (a % n, a / n) {
            (0, 0) => "e".to_string(),
            (i, 0) => format!("x^{i}"),
            (0, j) => format!("y^{j}"),
            (i, j) => format!("x^{i}y^{j}"),
        })
        .collect();
    Ok(Group::from_flat(order, flat, Some(labels), AssocCheck::Inherited)?)
}

pub fn direct_product(h: &Group, k: &Group) -> Result<Group, ConstructionError> {
    let (nh, nk) = (h.order(), k.order());
    let order = nh.saturating_mul(nk);
    if order > DEFAULT_ELEMENT_CAP {
        return Err(ConstructionError::OrderCapExceeded { order, cap: DEFAULT_ELEMENT_CAP });
    }
    let mut flat = Vec::with_capacity(order * order);
    for a in 0..order {
        let (a1, a2) = (a / nk, a % nk);
        for b in 0..order {
            let (b1, b2) = (b / nk, b % nk);
            flat.push((h.mul(a1, b1) * nk + k.mul(a2, b2)) as u32);
        }
    }
    let labels = if h.has_labels() || k.has_labels() {
        Some((0..order).map(|a| format!("({},{})", h.label(a / nk), k.label(a % nk))).collect())
    } else {
        None
    };
    Ok(Group::from_flat(order, flat, labels, AssocCheck::Inherited)?)
}

/// GF(8) = GF(2)[w]/(w^3 + w + 1), elements as 3-bit polynomials.
fn gf8_mul(a: usize, b: usize) -> usize {
    let mut r = 0;
    for i in 0..3 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    for i in [4, 3] {
        if r >> i & 1 == 1 {
            r ^= 0b1011 << (i - 3);
        }
    }
    r
}

/// PSL(2,q) acting on the projective line `GF(q) ∪ {∞}` (∞ is point q).
pub fn psl2(q: usize) -> Result<Group, ConstructionError> {
    let inf = q;
    let gens = match q {
        5 | 7 => {
            let inv = |x: usize| (1..q).find(|y| x * y % q == 1).expect("field");
            // x -> x + 1 and x -> -1/x
            let t = (0..=q).map(|x| if x == inf { inf } else { (x + 1) % q }).collect();
            let s = (0..=q)
                .map(|x| match x {
                    _ if x == inf => 0,
                    0 => inf,
                    _ => (q - inv(x)) % q,
                })
                .collect();
            vec![t, s]
        }
        8 => {
            let inv = |x: usize| (1..8).find(|&y| gf8_mul(x, y) == 1).expect("field");
            // x -> wx + 1 and x -> 1/x, with w the class of the indeterminate
            let a = (0..=q).map(|x| if x == inf { inf } else { gf8_mul(2, x) ^ 1 }).collect();
            let b = (0..=q)
                .map(|x| match x {
                    _ if x == inf => 0,
                    0 => inf,
                    _ => inv(x),
                })
                .collect();
            vec![a, b]
        }
        _ => return Err(bad("PSL2", format!("q must be 5, 7 or 8, got {q}"))),
    };
    let gens: Vec<Permutation> =
        gens.into_iter().map(|images| Permutation::from_images(images).expect("fractional linear map")).collect();
    Ok(permutation_group(q + 1, &gens)?)
}

/// Parse tree of the group-spec language.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Semidihedral(usize),
    Dicyclic(usize),
    VGroup(usize),
    UGroup(usize, usize),
    Symmetric(usize),
    Alternating(usize),
    ElemAbelian(usize, usize),
    HolCyclic(usize),
    Sdp(usize, usize, usize),
    R,
    G21,
    Psl2(usize),
    Heis(usize),
    Prod(Vec<GroupSpec>),
    QuotCenter(Box<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Cyclic(n) => write!(f, "C({n})"),
            Dihedral(m) => write!(f, "D({m})"),
            Semidihedral(n) => write!(f, "SD({n})"),
            Dicyclic(n) => write!(f, "T({n})"),
            VGroup(n) => write!(f, "V({n})"),
            UGroup(n, m) => write!(f, "U({n},{m})"),
            Symmetric(n) => write!(f, "S({n})"),
            Alternating(n) => write!(f, "A({n})"),
            ElemAbelian(p, k) => write!(f, "EA({p},{k})"),
            HolCyclic(n) => write!(f, "Hol({n})"),
            Sdp(n, p, k) => write!(f, "sdp({n},{p},{k})"),
            R => write!(f, "R"),
            G21 => write!(f, "G21"),
            Psl2(q) => write!(f, "PSL2({q})"),
            Heis(p) => write!(f, "Heis({p})"),
            Prod(parts) => {
                write!(f, "prod(")?;
                for (i, s) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            QuotCenter(s) => write!(f, "quotZ({s})"),
        }
    }
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

fn totient(n: usize) -> usize {
    (1..=n).filter(|&a| gcd(a, n) == 1).count()
}

impl GroupSpec {
    /// Order of the group this spec builds, when it is known without
    /// building (everything except `quotZ`).
    pub fn expected_order(&self) -> Option<usize> {
        use GroupSpec::*;
        match *self {
            Cyclic(n) => Some(n),
            Dihedral(m) => Some(m),
            Semidihedral(n) | VGroup(n) => n.checked_mul(8),
            Dicyclic(n) => n.checked_mul(4),
            UGroup(n, m) => n.checked_mul(m)?.checked_mul(2),
            Symmetric(n) => factorial(n),
            Alternating(n) => factorial(n).map(|f| if n >= 2 { f / 2 } else { f }),
            ElemAbelian(p, k) => (0..k).try_fold(1usize, |acc, _| acc.checked_mul(p)),
            HolCyclic(n) => n.checked_mul(totient(n)),
            Sdp(n, p, _) => n.checked_mul(p),
            R => Some(20),
            G21 => Some(21),
            Psl2(q) => match q {
                5 => Some(60),
                7 => Some(168),
                8 => Some(504),
                _ => None,
            },
            Heis(p) => p.checked_mul(p)?.checked_mul(p),
            Prod(ref parts) => parts.iter().try_fold(1usize, |acc, s| acc.checked_mul(s.expected_order()?)),
            QuotCenter(_) => None,
        }
    }

    pub fn build(&self) -> Result<Group, ConstructionError> {
        use GroupSpec::*;
        if let Some(order) = self.expected_order() {
            if order > DEFAULT_ELEMENT_CAP {
                return Err(ConstructionError::OrderCapExceeded { order, cap: DEFAULT_ELEMENT_CAP });
            }
        }
        match self {
            Cyclic(n) => cyclic(*n),
            Dihedral(m) => dihedral(*m),
            Semidihedral(n) => semidihedral(*n),
            Dicyclic(n) => dicyclic(*n),
            VGroup(n) => v_group(*n),
            UGroup(n, m) => u_group(*n, *m),
            Symmetric(n) => symmetric(*n),
            Alternating(n) => alternating(*n),
            ElemAbelian(p, k) => elem_abelian(*p, *k),
            HolCyclic(n) => holomorph_cyclic(*n),
            Sdp(n, p, k) => sdp_cyclic(*n, *p, *k),
            R => sdp_cyclic(5, 4, 2),
            G21 => sdp_cyclic(7, 3, 2),
            Psl2(q) => psl2(*q),
            Heis(p) => heisenberg(*p),
            Prod(parts) => {
                let mut acc = match parts.first() {
                    Some(s) => s.build()?,
                    None => Group::trivial(),
                };
                for s in parts.iter().skip(1) {
                    acc = direct_product(&acc, &s.build()?)?;
                }
                Ok(acc)
            }
            QuotCenter(s) => {
                let g = s.build()?;
                Ok(g.quotient(&center(&g))?)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            return self.err("expected a group name");
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or_else(|| Err(ParseError { position: start, message: "integer too large".into() }), Ok)
    }

    fn ints(&mut self, count: usize) -> Result<Vec<usize>, ParseError> {
        self.expect(b'(')?;
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                self.expect(b',')?;
            }
            out.push(self.int()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        let spec = match name.as_str() {
            "R" => GroupSpec::R,
            "G21" => GroupSpec::G21,
            "C" => GroupSpec::Cyclic(self.ints(1)?[0]),
            "D" => GroupSpec::Dihedral(self.ints(1)?[0]),
            "SD" => GroupSpec::Semidihedral(self.ints(1)?[0]),
            "T" => GroupSpec::Dicyclic(self.ints(1)?[0]),
            "V" => GroupSpec::VGroup(self.ints(1)?[0]),
            "S" => GroupSpec::Symmetric(self.ints(1)?[0]),
            "A" => GroupSpec::Alternating(self.ints(1)?[0]),
            "Hol" => GroupSpec::HolCyclic(self.ints(1)?[0]),
            "PSL2" => GroupSpec::Psl2(self.ints(1)?[0]),
            "Heis" => GroupSpec::Heis(self.ints(1)?[0]),
            "U" => {
                let v = self.ints(2)?;
                GroupSpec::UGroup(v[0], v[1])
            }
            "EA" => {
                let v = self.ints(2)?;
                GroupSpec::ElemAbelian(v[0], v[1])
            }
            "sdp" => {
                let v = self.ints(3)?;
                GroupSpec::Sdp(v[0], v[1], v[2])
            }
            "prod" => {
                self.expect(b'(')?;
                let mut parts = vec![self.spec()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    parts.push(self.spec()?);
                }
                self.expect(b')')?;
                if parts.len() < 2 {
                    return Err(ParseError { position: start, message: "prod needs at least two factors".into() });
                }
                GroupSpec::Prod(parts)
            }
            "quotZ" => {
                self.expect(b'(')?;
                let inner = self.spec()?;
                self.expect(b')')?;
                GroupSpec::QuotCenter(Box::new(inner))
            }
            other => return Err(ParseError { position: start, message: format!("unknown group family {other:?}") }),
        };
        Ok(spec)
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let spec = p.spec()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(spec)
}

impl std::str::FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_spec(s)
    }
}
