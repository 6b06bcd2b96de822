//! Finite groups as validated Cayley tables.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bitset::ElementSet;

/// Hard upper bound on the number of elements of any constructed group.
pub const DEFAULT_ELEMENT_CAP: usize = 20_000;

/// Largest order for which associativity of an inherited table is checked on
/// every triple. Above it a fixed-seed sample of triples is checked instead.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;

const SAMPLED_TRIPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("Cayley table is empty")]
    EmptyTable,
    #[error("row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry ({row}, {col}) = {value} is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("no two-sided identity element in table")]
    NoIdentity,
    #[error("not a Latin square: {kind} {index} repeats element {value}")]
    NotLatinSquare { kind: &'static str, index: usize, value: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group order {order} exceeds element cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("set belongs to a group of order {got}, expected {expected}")]
    WrongAmbient { expected: usize, got: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum AssocCheck {
    Full,
    /// Full below [`FULL_ASSOCIATIVITY_LIMIT`], sampled above it. Used where
    /// the table was produced by an associative operation.
    Inherited,
}

/// An immutable finite group. Element `0` is always the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group").field("order", &self.order).finish_non_exhaustive()
    }
}

impl Group {
    /// Validates an arbitrary multiplication table. The identity is located
    /// and relabeled to index 0; associativity is checked on every triple.
    pub fn from_cayley_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_rows(table, None, AssocCheck::Full)
    }

    pub fn from_cayley_table_with_labels(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self, GroupError> {
        Self::from_rows(table, Some(labels), AssocCheck::Full)
    }

    pub(crate) fn from_rows(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        assoc: AssocCheck,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::EmptyTable);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::NotSquare { row, len: r.len(), order });
            }
        }
        if order > u32::MAX as usize {
            return Err(GroupError::OrderCapExceeded { order, cap: u32::MAX as usize });
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, r) in table.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange { row, col, value, order });
                }
                flat.push(value as u32);
            }
        }
        Self::from_flat(order, flat, labels, assoc)
    }

    /// `flat[a * order + b]` is the index of `a * b`.
    pub(crate) fn from_flat(
        order: usize,
        mut flat: Vec<u32>,
        mut labels: Option<Vec<String>>,
        assoc: AssocCheck,
    ) -> Result<Self, GroupError> {
        debug_assert_eq!(flat.len(), order * order);
        let at = |t: &[u32], a: usize, b: usize| t[a * order + b] as usize;

        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(&flat, e, a) == a && at(&flat, a, e) == a))
            .ok_or(GroupError::NoIdentity)?;
        if identity != 0 {
            // Swap labels 0 and `identity` everywhere.
            let swap = |x: usize| {
                if x == 0 {
                    identity
                } else if x == identity {
                    0
                } else {
                    x
                }
            };
            let mut relabeled = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    relabeled[swap(a) * order + swap(b)] = swap(at(&flat, a, b)) as u32;
                }
            }
            flat = relabeled;
            if let Some(l) = labels.as_mut() {
                l.swap(0, identity);
            }
        }

        let mut seen = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let v = at(&flat, a, b);
                if seen[v] == a {
                    return Err(GroupError::NotLatinSquare { kind: "row", index: a, value: v });
                }
                seen[v] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..order {
            for a in 0..order {
                let v = at(&flat, a, b);
                if seen[v] == b {
                    return Err(GroupError::NotLatinSquare { kind: "column", index: b, value: v });
                }
                seen[v] = b;
            }
        }

        let mut inverses = vec![0u32; order];
        for (a, inv) in inverses.iter_mut().enumerate() {
            let b = (0..order).find(|&b| at(&flat, a, b) == 0).expect("Latin row holds identity");
            if at(&flat, b, a) != 0 {
                return Err(GroupError::NoInverse { element: a });
            }
            *inv = b as u32;
        }

        let full = match assoc {
            AssocCheck::Full => true,
            AssocCheck::Inherited => order <= FULL_ASSOCIATIVITY_LIMIT,
        };
        if full {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(&flat, a, b);
                    let row_ab = &flat[ab * order..(ab + 1) * order];
                    let row_a = &flat[a * order..(a + 1) * order];
                    let row_b = &flat[b * order..(b + 1) * order];
                    for c in 0..order {
                        if row_ab[c] != row_a[row_b[c] as usize] {
                            return Err(GroupError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_ce17);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order));
                if at(&flat, at(&flat, a, b), c) != at(&flat, a, at(&flat, b, c)) {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }

        if let Some(l) = &labels {
            if l.len() != order {
                labels = None;
            }
        }
        Ok(Self { order, table: flat, inverses, labels })
    }

    pub fn trivial() -> Self {
        Self { order: 1, table: vec![0], inverses: vec![0], labels: None }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.table[a * self.order + b] == self.table[b * self.order + a]
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `g x g^-1`
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let (mut acc, mut base, mut k) = (0, a, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None if a == 0 => "e".to_string(),
            None => format!("g{a}"),
        }
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).iter().map(|&x| x as usize).collect()).collect()
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn trivial_subgroup(&self) -> ElementSet {
        ElementSet::singleton(self.order, 0)
    }

    fn check_ambient(&self, s: &ElementSet) -> Result<(), GroupError> {
        if s.group_order() != self.order {
            return Err(GroupError::WrongAmbient { expected: self.order, got: s.group_order() });
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        if h.group_order() != self.order || !h.contains(0) {
            return false;
        }
        // Finite: closure under multiplication suffices.
        h.iter().all(|a| h.iter().all(|b| h.contains(self.mul(a, b))))
    }

    /// Smallest subgroup containing `s`.
    pub fn subgroup_generated(&self, s: &ElementSet) -> ElementSet {
        let gens: Vec<usize> = s.iter().filter(|&x| x != 0).collect();
        self.closure_from(self.trivial_subgroup(), &gens)
    }

    /// Closes `start` (which must be a subgroup) under right multiplication by
    /// `gens`.
    pub(crate) fn closure_from(&self, start: ElementSet, gens: &[usize]) -> ElementSet {
        let mut set = start;
        let mut queue: VecDeque<usize> = set.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn is_normal(&self, h: &ElementSet) -> Result<bool, GroupError> {
        self.check_ambient(h)?;
        if !self.is_subgroup(h) {
            return Err(GroupError::NotASubgroup);
        }
        Ok(self.normal_unchecked(h))
    }

    fn normal_unchecked(&self, h: &ElementSet) -> bool {
        h.iter().all(|x| (0..self.order).all(|g| h.contains(self.conjugate(x, g))))
    }

    /// Smallest normal subgroup containing `s`.
    pub fn normal_closure(&self, s: &ElementSet) -> ElementSet {
        let mut conj = ElementSet::empty(self.order);
        for x in s {
            for g in self.elements() {
                conj.insert(self.conjugate(x, g));
            }
        }
        self.subgroup_generated(&conj)
    }

    /// Quotient by a normal subgroup. Cosets are numbered by their smallest
    /// representative, so the identity coset is 0. Returns the quotient
    /// together with the projection `element -> coset index`.
    pub fn quotient_map(&self, n: &ElementSet) -> Result<(Group, Vec<usize>), GroupError> {
        self.check_ambient(n)?;
        if !self.is_subgroup(n) {
            return Err(GroupError::NotASubgroup);
        }
        if !self.normal_unchecked(n) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for x in n {
                coset_of[self.mul(g, x)] = idx;
            }
        }
        let q = reps.len();
        let mut flat = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                flat.push(coset_of[self.mul(a, b)] as u32);
            }
        }
        let labels = reps.iter().map(|&r| format!("{}N", self.label(r))).collect();
        let group = Group::from_flat(q, flat, Some(labels), AssocCheck::Inherited)?;
        Ok((group, coset_of))
    }

    pub fn quotient(&self, n: &ElementSet) -> Result<Group, GroupError> {
        self.quotient_map(n).map(|(g, _)| g)
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> ElementSet {
        let mut comms = ElementSet::empty(self.order);
        for a in self.elements() {
            for b in self.elements() {
                comms.insert(self.commutator(a, b));
            }
        }
        self.subgroup_generated(&comms)
    }

    /// Commutator subgroup of a subgroup `h`.
    pub fn derived_of(&self, h: &ElementSet) -> ElementSet {
        let mut comms = ElementSet::empty(self.order);
        for a in h {
            for b in h {
                comms.insert(self.commutator(a, b));
            }
        }
        self.subgroup_generated(&comms)
    }

    /// `G = G^(0) > G^(1) > ...` until the series stabilizes.
    pub fn derived_series(&self) -> Vec<ElementSet> {
        let mut series = vec![self.full_set()];
        loop {
            let next = self.derived_of(series.last().expect("non-empty"));
            if &next == series.last().expect("non-empty") {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|h| h.len() == 1)
    }

    pub fn conjugacy_classes(&self) -> Vec<ElementSet> {
        let mut seen = ElementSet::empty(self.order);
        let mut classes = Vec::new();
        for x in self.elements() {
            if seen.contains(x) {
                continue;
            }
            let mut class = ElementSet::empty(self.order);
            for g in self.elements() {
                class.insert(self.conjugate(x, g));
            }
            seen = seen.union(&class);
            classes.push(class);
        }
        classes
    }

    /// Non-trivial with no normal subgroups besides 1 and itself.
    pub fn is_simple(&self) -> bool {
        if self.order == 1 {
            return false;
        }
        self.conjugacy_classes()
            .iter()
            .filter(|c| !c.contains(0))
            .all(|c| self.subgroup_generated(c).len() == self.order && self.normal_closure(c).is_full())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// S3 on {0,1,2}: elements e, (01), (12), (02), (012), (021) as image arrays.
    pub(crate) fn s3_table() -> Vec<Vec<usize>> {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let (pa, pb) = (perms[a], perms[b]);
                        index([pb[pa[0]], pb[pa[1]], pb[pa[2]]])
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn trivial_and_z2_tables() {
        let g = Group::from_cayley_table(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        let z2 = Group::from_cayley_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.order(), 2);
        assert!(z2.is_abelian());
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn identity_is_relabeled_to_zero() {
        // Z3 with identity stored at index 2.
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = Group::from_cayley_table(t).unwrap();
        for a in g.elements() {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn mutated_s3_is_rejected() {
        let t = s3_table();
        assert!(Group::from_cayley_table(t.clone()).is_ok());
        // Swap an intercalate (2x2 Latin subsquare) away from the identity
        // row, column and entries: the table stays a Latin square with
        // identity 0 and the same inverses.
        let mut rejected = 0;
        for (r1, r2, c1, c2) in (1..6).flat_map(|r1| {
            (r1 + 1..6).flat_map(move |r2| (1..6).flat_map(move |c1| (c1 + 1..6).map(move |c2| (r1, r2, c1, c2))))
        }) {
            if t[r1][c1] != t[r2][c2] || t[r1][c2] != t[r2][c1] || t[r1][c1] == 0 || t[r1][c2] == 0 {
                continue;
            }
            let mut bad = t.clone();
            bad[r1].swap(c1, c2);
            bad[r2].swap(c1, c2);
            match Group::from_cayley_table(bad) {
                Err(GroupError::NotAssociative { .. }) => rejected += 1,
                other => panic!("unexpected {other:?}"),
            }
        }
        assert!(rejected > 0);
    }

    #[test]
    fn non_associative_latin_square() {
        // A loop of order 5 (identity 0) that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(Group::from_cayley_table(t), Err(GroupError::NotAssociative { .. })));
    }

    #[test]
    fn malformed_tables() {
        assert_eq!(Group::from_cayley_table(vec![]), Err(GroupError::EmptyTable));
        assert!(matches!(
            Group::from_cayley_table(vec![vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            Group::from_cayley_table(vec![vec![0, 2], vec![1, 0]]),
            Err(GroupError::EntryOutOfRange { .. })
        ));
        assert_eq!(Group::from_cayley_table(vec![vec![1, 0], vec![1, 0]]), Err(GroupError::NoIdentity));
        assert!(matches!(
            Group::from_cayley_table(vec![vec![0, 1], vec![1, 1]]),
            Err(GroupError::NotLatinSquare { .. })
        ));
    }

    #[test]
    fn one_sided_inverse_is_reported() {
        // Identity 0; element 1 has right inverse 2 but 2*1 = 3.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 2, 0, 4, 3],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 0, 3, 1, 2],
        ];
        assert!(matches!(Group::from_cayley_table(t), Err(GroupError::NoInverse { element: 1 })));
    }

    #[test]
    fn s3_subgroups_and_series() {
        let g = Group::from_cayley_table(s3_table()).unwrap();
        let n = g.order();
        assert_eq!(g.subgroup_generated(&ElementSet::empty(n)), g.trivial_subgroup());
        let c3 = g.subgroup_generated(&ElementSet::singleton(n, 4));
        assert_eq!(c3.iter().collect::<Vec<_>>(), vec![0, 4, 5]);
        assert_eq!(g.subgroup_generated(&g.full_set()), g.full_set());
        assert!(g.is_normal(&c3).unwrap());
        let t = g.subgroup_generated(&ElementSet::singleton(n, 1));
        assert!(!g.is_normal(&t).unwrap());
        assert_eq!(g.is_normal(&ElementSet::from_elements(n, [0, 1, 2])), Err(GroupError::NotASubgroup));
        assert_eq!(g.derived_subgroup(), c3);
        assert!(g.is_solvable());
        assert!(!g.is_abelian());
        assert!(!g.is_simple());
    }

    #[test]
    fn quotients_of_s3() {
        let g = Group::from_cayley_table(s3_table()).unwrap();
        assert_eq!(g.quotient(&g.trivial_subgroup()).unwrap().cayley_table(), g.cayley_table());
        assert_eq!(g.quotient(&g.full_set()).unwrap().order(), 1);
        let c3 = g.derived_subgroup();
        let q = g.quotient(&c3).unwrap();
        assert_eq!(q.order(), 2);
        let t = g.subgroup_generated(&ElementSet::singleton(6, 1));
        assert_eq!(g.quotient(&t), Err(GroupError::NotNormal));
    }
}
