//! Executable checks of the centralizer-counting results. Universal
//! statements are checked over the catalog; family formulas over parameter
//! sweeps. Failures are data: each report lists its counterexamples.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{Catalog, CatalogEntry, ProfileError};
use crate::centralizers::{
    cent_profile, cent_set, center, is_ca_group, two_cent, two_cent_naive, CentProfile, CentralizerClasses,
    CentralizerError,
};
use crate::constructions::{dihedral, direct_product, gcd, is_prime, sdp_cyclic, GroupSpec};
use crate::group::Group;

pub const REPORT_VERSION: &str = "report_v1";
pub const DEFAULT_ORDER_CAP: usize = 600;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub instance: String,
    pub reason: String,
}

/// Outcome of one theorem over its instances. `instances` counts only the
/// checked ones; skipped instances are listed separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub version: String,
    pub theorem_id: String,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: Vec<Skipped>,
    pub counterexamples: Vec<Counterexample>,
}

impl TheoremReport {
    fn from_rows(theorem_id: &str, rows: Vec<(String, Outcome)>) -> Self {
        let mut report = Self {
            version: REPORT_VERSION.to_string(),
            theorem_id: theorem_id.to_string(),
            instances: 0,
            passed: 0,
            failed: 0,
            skipped: Vec::new(),
            counterexamples: Vec::new(),
        };
        for (instance, outcome) in rows {
            match outcome {
                Outcome::Pass => {
                    report.instances += 1;
                    report.passed += 1;
                }
                Outcome::Fail { expected, got } => {
                    report.instances += 1;
                    report.failed += 1;
                    report.counterexamples.push(Counterexample { instance, expected, got });
                }
                Outcome::Skip(reason) => report.skipped.push(Skipped { instance, reason }),
            }
        }
        report
    }

    pub fn is_success(&self) -> bool {
        self.failed == 0
    }
}

/// Result of checking one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { expected: String, got: String },
    Skip(String),
}

fn skip(reason: impl Into<String>) -> Outcome {
    Outcome::Skip(reason.into())
}

fn fail(expected: impl Into<String>, got: impl ToString) -> Outcome {
    Outcome::Fail { expected: expected.into(), got: got.to_string() }
}

/// Collects the failed conditions of one instance.
#[derive(Default)]
struct Checks {
    expected: Vec<String>,
    got: Vec<String>,
}

impl Checks {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, got: T) {
        if expected != got {
            self.expected.push(format!("{what} = {expected:?}"));
            self.got.push(format!("{what} = {got:?}"));
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if !ok {
            self.expected.push(what.to_string());
            self.got.push(format!("not ({what})"));
        }
    }

    fn iff(&mut self, lhs: &str, l: bool, rhs: &str, r: bool) {
        if l != r {
            self.expected.push(format!("({lhs}) iff ({rhs})"));
            self.got.push(format!("({lhs}) is {l}, ({rhs}) is {r}"));
        }
    }

    fn implies(&mut self, hyp: &str, h: bool, concl: &str, c: bool) {
        if h && !c {
            self.expected.push(format!("({hyp}) implies ({concl})"));
            self.got.push(format!("({hyp}) but not ({concl})"));
        }
    }

    fn done(self) -> Outcome {
        if self.expected.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Fail { expected: self.expected.join("; "), got: self.got.join("; ") }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// `None` runs every theorem.
    pub theorem_ids: Option<Vec<String>>,
    /// `None` runs over the whole catalog.
    pub catalog_subset: Option<Vec<String>>,
    pub order_cap: usize,
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            theorem_ids: None,
            catalog_subset: None,
            order_cap: DEFAULT_ORDER_CAP,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),
    #[error("order cap must be at least 2, got {0}")]
    BadOrderCap(usize),
    #[error("jobs must be at least 1")]
    BadJobs,
    #[error("could not start worker threads: {0}")]
    ThreadPool(String),
}

type Rows = Vec<(String, Outcome)>;

struct Theorem {
    id: &'static str,
    statement: &'static str,
    run: fn(&Ctx) -> Rows,
}

const THEOREMS: &[Theorem] = &[
    Theorem { id: "lem2.1", statement: "for non-abelian G, Z(G) is not in Cent(G), and G is in 2-Cent(G) iff Z(G) != 1", run: lem2_1 },
    Theorem { id: "lem2.2", statement: "for non-abelian G, Cent(G) is a proper subset of 2-Cent(G) when Z(G) != 1, and |Cent(G)| <= |2-Cent(G)| when Z(G) = 1", run: lem2_2 },
    Theorem { id: "lem2.3", statement: "|Cent(H x K)| = |Cent(H)| |Cent(K)|", run: lem2_3 },
    Theorem { id: "thm2.4", statement: "|2-Cent(H x K)| = |2-Cent(H)| |2-Cent(K)| + delta(K) |2-Cent(H)| + delta(H) |2-Cent(K)|", run: thm2_4 },
    Theorem { id: "cor2.6", statement: "seven-term expansion of |2-Cent(H1 x H2 x H3)|", run: cor2_6 },
    Theorem { id: "thm2.6", statement: "a CA-group has |2-Cent(G)| = |Cent(G)| when Z(G) = 1 and |Cent(G)| + 1 otherwise", run: thm2_6 },
    Theorem { id: "rem2.7", statement: "centerless CA-groups are primitive n- and (2,n)-centralizer; if G and G/Z are CA and Z2 != Z, the two primitivity notions agree", run: rem2_7 },
    Theorem { id: "cor2.8", statement: "a CA-group is (2,n)-centralizer iff Z = 1 and it is n-centralizer, or Z != 1 and it is (n-1)-centralizer", run: cor2_8 },
    Theorem { id: "thm2.9", statement: "for non-abelian Z_n x| Z_p: |Z| divides n, |Cent| = n/|Z| + 2, |2-Cent| = n + 2 (Z = 1) or n/|Z| + 3", run: thm2_9 },
    Theorem { id: "cor2.10", statement: "counts for G with G/Z isomorphic to a non-abelian Z_n x| Z_p, by whether Z = 1 and whether Z2 = Z", run: cor2_10 },
    Theorem { id: "cor2.11", statement: "with Z != 1 and G/Z a non-abelian Z_n x| Z_p, G is primitive n-centralizer iff Z2 = Z", run: cor2_11 },
    Theorem { id: "cor2.12", statement: "with G/Z a non-abelian Z_n x| Z_p, G is primitive (2,n)-centralizer iff Z = 1", run: cor2_12 },
    Theorem { id: "thm2.13", statement: "non-abelian G is CA iff |2-Cent(G)| = r + 1 (Z = 1) or r + 2 (Z != 1)", run: thm2_13 },
    Theorem { id: "sec4.n1", statement: "G is (2,1)-centralizer iff G is abelian", run: class_n1 },
    Theorem { id: "sec4.n2", statement: "there is no (2,2)-centralizer group", run: class_n2 },
    Theorem { id: "sec4.n3", statement: "there is no (2,3)-centralizer group", run: class_n3 },
    Theorem { id: "thm2.14", statement: "there is no (2,4)-centralizer group", run: class_n4 },
    Theorem { id: "lem2.15", statement: "|Cent(G)| = 6 and G/Z isomorphic to Z_2^4 imply G is CA", run: lem2_15 },
    Theorem { id: "cor2.16", statement: "n-centralizer groups with n <= 9 are CA", run: cor2_16 },
    Theorem { id: "lem2.17", statement: "(2,n)-centralizer groups with n <= 9 are CA", run: lem2_17 },
    Theorem { id: "thm2.18", statement: "(2,5)-centralizer iff S3, or Z != 1 and G/Z is Z_2^2; primitive iff S3", run: class_n5 },
    Theorem { id: "thm2.19", statement: "(2,6)-centralizer iff A4, or Z != 1 and G/Z is Z_3^2 or S3; primitive iff A4", run: class_n6 },
    Theorem { id: "thm2.20", statement: "(2,7)-centralizer iff D10, R, or Z != 1 and 6-centralizer; primitive iff D10 or R", run: class_n7 },
    Theorem { id: "thm2.21", statement: "(2,8)-centralizer iff 7-centralizer with Z != 1; none is primitive", run: class_n8 },
    Theorem { id: "thm2.22", statement: "(2,9)-centralizer iff D14, Hol(Z7), the non-abelian group of order 21, or Z != 1 and 8-centralizer; primitive iff one of the first three", run: class_n9 },
    Theorem { id: "lem3.1", statement: "G/Z isomorphic to A5 implies G is A5 or |2-Cent(G)| = |Cent(G)| + 1 in {23, 33}", run: lem3_1 },
    Theorem { id: "sec5.solv", statement: "|2-Cent(G)| < 22 implies G solvable; simple G with |2-Cent(G)| = 22 is A5", run: sec5_solv },
    Theorem { id: "sec5.psl", statement: "a non-abelian simple G with |2-Cent(G)| <= 100 is PSL(2,5), PSL(2,7) or PSL(2,8)", run: sec5_psl },
    Theorem { id: "sec5.pgroup", statement: "[G:Z] = p^n with all proper centralizers of order p|Z| gives |Cent| = p^(n-1) + ... + p + 2 and |2-Cent| = |Cent| + 1", run: sec5_pgroup },
    Theorem { id: "thm5.7", statement: "G/Z elementary abelian of order p^n with proper centralizers of order p|Z| or p^2|Z|: |Cent| = s + t + 1, |2-Cent| = |Cent| + 1, s + t(p + 1) = (p^n - 1)/(p - 1)", run: thm5_7 },
    Theorem { id: "sec6.p4", statement: "non-abelian groups of order p^4 have |Cent| in {p+2, p^2+2, p^2+p+2} and |2-Cent| = |Cent| + 1", run: sec6_p4 },
    Theorem { id: "sec6.D", statement: "counts for G with G/Z dihedral of order 2n, n >= 3", run: sec6_d },
    Theorem { id: "sec6.SD", statement: "|2-Cent(SD_8n)| = |Cent| + 1 = n + 3 (n odd) or 2n + 3 (n even)", run: sec6_sd },
    Theorem { id: "sec6.T", statement: "|2-Cent(T_4n)| = |Cent| + 1 = n + 3", run: sec6_t },
    Theorem { id: "sec6.V", statement: "|2-Cent(V_8n)| = |Cent| + 1 = 2n + 3 (n odd) or n + 3 (n even)", run: sec6_v },
    Theorem { id: "sec6.U", statement: "|2-Cent(U(n,m))| is 1 for m <= 2, m + 2 (m odd, n = 1), m + 3 (m odd, n != 1), m/2 + 3 (m even)", run: sec6_u },
    Theorem { id: "thm1.1", statement: "n-centralizer classification for n <= 9 in terms of G/Z", run: thm1_1 },
    Theorem { id: "thm1.2", statement: "known facts on r, CA-groups, abelian normal subgroups of prime index and solvability", run: thm1_2 },
];

/// Every theorem id with a one-line statement, in report order.
pub fn theorems() -> impl Iterator<Item = (&'static str, &'static str)> {
    THEOREMS.iter().map(|t| (t.id, t.statement))
}

/// Entries used by name in the checks; looked up in the catalog under
/// test first and built on the side otherwise.
const REFERENCE_NAMES: &[&str] = &[
    "C(2)", "C(3)", "C(6)", "S(3)", "A(4)", "A(5)", "D(8)", "D(10)", "D(12)", "D(14)", "T(2)", "R", "Hol(7)", "G21",
    "EA(2,2)", "EA(2,3)", "EA(2,4)", "EA(3,2)", "EA(5,2)", "EA(7,2)", "PSL2(5)", "PSL2(7)", "PSL2(8)",
];

const PRODUCT_FACTORS: [&str; 8] = ["C(2)", "C(3)", "S(3)", "D(8)", "A(4)", "T(2)", "D(10)", "C(6)"];

const PRODUCT_TRIPLES: [[&str; 3]; 6] = [
    ["S(3)", "C(2)", "C(2)"],
    ["C(2)", "C(2)", "C(2)"],
    ["S(3)", "S(3)", "C(3)"],
    ["A(4)", "S(3)", "C(2)"],
    ["T(2)", "S(3)", "C(3)"],
    ["D(8)", "C(3)", "C(2)"],
];

struct Ctx<'a> {
    catalog: &'a Catalog,
    refs: Catalog,
    entries: Vec<&'a CatalogEntry>,
    subset: bool,
    cap: usize,
}

/// A catalog group with its profile, ready to check.
struct Subject<'a> {
    entry: &'a CatalogEntry,
    g: &'a Group,
    p: &'a CentProfile,
}

impl Subject<'_> {
    fn abelian(&self) -> bool {
        self.p.center_order == self.p.order
    }

    fn centerless(&self) -> bool {
        self.p.center_order == 1
    }

    fn q(&self) -> &Group {
        self.entry.central_quotient().expect("the group was built")
    }
}

const ABELIAN: &str = "abelian";
const HYPOTHESIS: &str = "hypothesis does not hold";

impl<'a> Ctx<'a> {
    fn new(catalog: &'a Catalog, subset: Option<&[String]>, cap: usize) -> Result<Self, SuiteError> {
        let entries = match subset {
            Some(names) => catalog.select(names).map_err(|e| match e {
                crate::catalog::CatalogError::UnknownEntry(n) => SuiteError::UnknownCatalogEntry(n),
                other => SuiteError::UnknownCatalogEntry(other.to_string()),
            })?,
            None => catalog.entries().iter().collect(),
        };
        let missing: Vec<GroupSpec> = REFERENCE_NAMES
            .iter()
            .filter(|n| catalog.get(n).is_none())
            .map(|n| n.parse().expect("reference names parse"))
            .collect();
        let refs = Catalog::from_specs(missing).expect("reference names are distinct");
        Ok(Self { catalog, refs, entries, subset: subset.is_some(), cap })
    }

    fn reference(&self, name: &str) -> &CatalogEntry {
        self.catalog
            .get(name)
            .or_else(|| self.refs.get(name))
            .unwrap_or_else(|| panic!("{name} is not a reference group"))
    }

    fn iso(&self, g: &Group, names: &[&str]) -> bool {
        names.iter().any(|n| self.reference(n).is_isomorphic_to(g))
    }

    fn cap_reason(&self, order: usize) -> Option<String> {
        (order > self.cap).then(|| format!("order {order} exceeds the cap {}", self.cap))
    }

    fn entry_order(e: &CatalogEntry) -> Option<usize> {
        e.expected_order().or_else(|| e.order().ok())
    }

    fn subject(&self, e: &'a CatalogEntry) -> Result<Subject<'a>, Outcome> {
        if let Some(reason) = Self::entry_order(e).and_then(|n| self.cap_reason(n)) {
            return Err(Outcome::Skip(reason));
        }
        let g = e.group().map_err(|err| fail("the group builds", err))?;
        let p = match e.profile() {
            Ok(p) => p,
            Err(ProfileError::Centralizer(CentralizerError::GroupTooSmall { .. })) => {
                return Err(skip("trivial group"))
            }
            Err(err) => return Err(fail("the profile computes", err)),
        };
        Ok(Subject { entry: e, g, p })
    }

    /// Runs `check` on every selected catalog group within the cap.
    fn each_group<F>(&self, check: F) -> Rows
    where
        F: Fn(&Subject) -> Outcome + Sync,
    {
        self.entries
            .par_iter()
            .map(|&e| {
                let outcome = match self.subject(e) {
                    Ok(s) => check(&s),
                    Err(o) => o,
                };
                (e.name.clone(), outcome)
            })
            .collect()
    }

    fn warm_up(&self) {
        self.entries.par_iter().for_each(|e| {
            if Self::entry_order(e).is_some_and(|n| n <= self.cap) {
                let _ = e.profile();
                let _ = e.central_quotient();
            }
        });
    }

    /// Factor lists for the product formulas: the fixed lists by default,
    /// all pairs of the selected entries when a subset is given.
    fn product_pairs(&self) -> Vec<Vec<&CatalogEntry>> {
        let pool: Vec<&CatalogEntry> = if self.subset {
            self.entries.clone()
        } else {
            PRODUCT_FACTORS.iter().map(|n| self.reference(n)).collect()
        };
        let mut out = Vec::new();
        for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                out.push(vec![pool[i], pool[j]]);
            }
        }
        out
    }

    fn product_triples(&self) -> Vec<Vec<&CatalogEntry>> {
        PRODUCT_TRIPLES
            .iter()
            .filter(|t| !self.subset || t.iter().all(|n| self.entries.iter().any(|e| e.name == *n)))
            .map(|t| t.iter().map(|n| self.reference(n)).collect())
            .collect()
    }

    /// Builds each product of `factor_lists` and runs `check` on the
    /// factors and the product.
    fn each_product<F>(&self, factor_lists: Vec<Vec<&CatalogEntry>>, check: F) -> Rows
    where
        F: Fn(&[&Group], &Group) -> Outcome + Sync,
    {
        factor_lists
            .par_iter()
            .map(|factors| {
                let names: Vec<&str> = factors.iter().map(|e| e.name.as_str()).collect();
                let instance = format!("prod({})", names.join(","));
                (instance, self.product_outcome(factors, &check))
            })
            .collect()
    }

    fn product_outcome<F>(&self, factors: &[&CatalogEntry], check: &F) -> Outcome
    where
        F: Fn(&[&Group], &Group) -> Outcome,
    {
        let mut order = 1usize;
        for e in factors {
            let Some(n) = Self::entry_order(e) else {
                return fail(format!("{} builds", e.name), "build error");
            };
            if n < 2 {
                return skip("a factor has order 1");
            }
            order = order.saturating_mul(n);
        }
        if let Some(reason) = self.cap_reason(order) {
            return Outcome::Skip(reason);
        }
        let mut groups = Vec::with_capacity(factors.len());
        for e in factors {
            match e.group() {
                Ok(g) => groups.push(g),
                Err(err) => return fail(format!("{} builds", e.name), err),
            }
        }
        let mut product = groups[0].clone();
        for h in &groups[1..] {
            product = match direct_product(&product, h) {
                Ok(p) => p,
                Err(err) => return fail("the product builds", err),
            };
        }
        check(&groups, &product)
    }
}

/// Runs the selected theorems over the default catalog.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<TheoremReport>, SuiteError> {
    run_suite_with(&Catalog::default(), config)
}

/// Runs the selected theorems over `catalog`. Reports come back in the
/// fixed theorem order whatever the thread count.
pub fn run_suite_with(catalog: &Catalog, config: &SuiteConfig) -> Result<Vec<TheoremReport>, SuiteError> {
    if config.order_cap < 2 {
        return Err(SuiteError::BadOrderCap(config.order_cap));
    }
    if config.jobs == 0 {
        return Err(SuiteError::BadJobs);
    }
    let selected: Vec<&Theorem> = match &config.theorem_ids {
        None => THEOREMS.iter().collect(),
        Some(ids) => {
            for id in ids {
                if !THEOREMS.iter().any(|t| t.id == id) {
                    return Err(SuiteError::UnknownTheorem(id.clone()));
                }
            }
            THEOREMS.iter().filter(|t| ids.iter().any(|id| id == t.id)).collect()
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| SuiteError::ThreadPool(e.to_string()))?;
    pool.install(|| {
        let cx = Ctx::new(catalog, config.catalog_subset.as_deref(), config.order_cap)?;
        cx.warm_up();
        Ok(selected.par_iter().map(|t| TheoremReport::from_rows(t.id, (t.run)(&cx))).collect())
    })
}

/// Serializes reports as the `report_v1` JSON array.
pub fn reports_to_json(reports: &[TheoremReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

fn lem2_1(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        let classes = CentralizerClasses::new(s.g);
        let z = center(s.g);
        let two = two_cent(s.g).expect("order at least 2");
        let mut c = Checks::default();
        c.holds("Z(G) is not in Cent(G)", !classes.centralizers.contains(&z));
        c.iff("G is in 2-Cent(G)", two.contains(&s.g.full_set()), "Z(G) != 1", z.len() > 1);
        c.done()
    })
}

fn lem2_2(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        let mut c = Checks::default();
        if s.centerless() {
            c.holds("|Cent(G)| <= |2-Cent(G)|", s.p.n_cent <= s.p.n_2cent);
        } else {
            let cent = cent_set(s.g);
            let two = two_cent(s.g).expect("order at least 2");
            c.holds("Cent(G) is a proper subset of 2-Cent(G)", cent.is_subset(&two) && cent.len() < two.len());
            c.holds("|Cent(G)| < |2-Cent(G)|", s.p.n_cent < s.p.n_2cent);
        }
        c.done()
    })
}

fn lem2_3(cx: &Ctx) -> Rows {
    cx.each_product(cx.product_pairs(), |f, prod| {
        let mut c = Checks::default();
        c.eq("|Cent(H x K)|", cent_set(f[0]).len() * cent_set(f[1]).len(), cent_set(prod).len());
        c.done()
    })
}

/// `|2-Cent|` and `delta` by direct enumeration of pairs.
fn naive_counts(g: &Group) -> (usize, usize) {
    let n = two_cent_naive(g).expect("order at least 2").len();
    (n, usize::from(center(g).len() == 1))
}

fn thm2_4(cx: &Ctx) -> Rows {
    cx.each_product(cx.product_pairs(), |f, prod| {
        let (h, dh) = naive_counts(f[0]);
        let (k, dk) = naive_counts(f[1]);
        let mut c = Checks::default();
        c.eq("|2-Cent(H x K)|", h * k + dk * h + dh * k, naive_counts(prod).0);
        c.done()
    })
}

fn cor2_6(cx: &Ctx) -> Rows {
    cx.each_product(cx.product_triples(), |f, prod| {
        let (h1, d1) = naive_counts(f[0]);
        let (h2, d2) = naive_counts(f[1]);
        let (h3, d3) = naive_counts(f[2]);
        let expansion =
            h1 * h2 * h3 + d1 * h2 * h3 + d2 * h1 * h3 + d3 * h1 * h2 + d1 * d2 * h3 + d1 * d3 * h2 + d2 * d3 * h1;
        let mut c = Checks::default();
        c.eq("|2-Cent(H1 x H2 x H3)|", expansion, naive_counts(prod).0);
        c.done()
    })
}

fn thm2_6(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        if !s.p.is_ca {
            return skip("not a CA-group");
        }
        let mut c = Checks::default();
        c.eq("|2-Cent(G)|", s.p.n_cent + usize::from(!s.centerless()), s.p.n_2cent);
        c.done()
    })
}

fn rem2_7(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        if !s.p.is_ca {
            return skip("not a CA-group");
        }
        let mut c = Checks::default();
        if s.centerless() {
            c.holds("primitive n-centralizer", s.p.primitive_n);
            c.holds("primitive (2,n)-centralizer", s.p.primitive_2n);
        } else if s.p.second_center_order != s.p.center_order && is_ca_group(s.q()) {
            c.iff("primitive n-centralizer", s.p.primitive_n, "primitive (2,n)-centralizer", s.p.primitive_2n);
        } else {
            return skip(HYPOTHESIS);
        }
        c.done()
    })
}

fn cor2_8(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        if !s.p.is_ca {
            return skip("not a CA-group");
        }
        let mut c = Checks::default();
        for n in 1..=s.p.n_2cent + 1 {
            let condition = if s.centerless() { s.p.n_cent == n } else { s.p.n_cent + 1 == n };
            c.iff(&format!("(2,{n})-centralizer"), s.p.n_2cent == n, "the center condition", condition);
        }
        c.done()
    })
}

fn pow_mod(base: usize, exp: usize, modulus: usize) -> usize {
    (0..exp).fold(1 % modulus, |acc, _| acc * base % modulus)
}

/// `(n, p, k)` with `p` prime and a non-trivial action of `Z_p` on `Z_n`.
fn sdp_sweep() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=20 {
        for p in [2, 3, 5, 7] {
            for k in 2..n {
                if gcd(k, n) == 1 && pow_mod(k, p, n) == 1 {
                    out.push((n, p, k));
                }
            }
        }
    }
    out
}

fn profile_of(g: &Group, label: &str) -> Result<CentProfile, Outcome> {
    cent_profile(g, label).map_err(|e| fail("the profile computes", e))
}

fn thm2_9(cx: &Ctx) -> Rows {
    sdp_sweep()
        .into_par_iter()
        .map(|(n, p, k)| {
            let name = format!("sdp({n},{p},{k})");
            let outcome = (|| {
                if let Some(reason) = cx.cap_reason(n * p) {
                    return Outcome::Skip(reason);
                }
                let g = match sdp_cyclic(n, p, k) {
                    Ok(g) => g,
                    Err(e) => return fail("the group builds", e),
                };
                let pr = match profile_of(&g, &name) {
                    Ok(pr) => pr,
                    Err(o) => return o,
                };
                if pr.center_order == pr.order {
                    return skip(ABELIAN);
                }
                let z = pr.center_order;
                let mut c = Checks::default();
                c.holds("|Z(G)| divides n", n % z == 0);
                c.eq("|Cent(G)|", n / z + 2, pr.n_cent);
                c.eq("|2-Cent(G)|", if z == 1 { n + 2 } else { n / z + 3 }, pr.n_2cent);
                c.done()
            })();
            (name, outcome)
        })
        .collect()
}

/// Every `(n, p)` for which `q` is a split extension of a cyclic normal
/// subgroup of order `n` by a group of prime order `p`.
fn cyclic_by_prime_splittings(q: &Group) -> BTreeSet<(usize, usize)> {
    let order = q.order();
    let orders: Vec<usize> = q.elements().map(|x| q.element_order(x)).collect();
    let mut out = BTreeSet::new();
    for x in q.elements() {
        let n = orders[x];
        if !order.is_multiple_of(n) || !is_prime(order / n) {
            continue;
        }
        let p = order / n;
        if out.contains(&(n, p)) {
            continue;
        }
        let c = q.subgroup_generated(&crate::ElementSet::singleton(order, x));
        if q.is_normal(&c).unwrap_or(false) && q.elements().any(|y| !c.contains(y) && orders[y] == p) {
            out.insert((n, p));
        }
    }
    out
}

/// Runs `check` on each splitting of a non-abelian `G/Z`.
fn with_splittings<F>(cx: &Ctx, check: F) -> Rows
where
    F: Fn(&Subject, usize, usize, &mut Checks) -> Option<&'static str> + Sync,
{
    cx.each_group(|s| {
        let q = s.q();
        if q.is_abelian() {
            return skip("G/Z(G) is abelian");
        }
        let splittings = cyclic_by_prime_splittings(q);
        if splittings.is_empty() {
            return skip("G/Z(G) is not cyclic-by-prime split");
        }
        let mut c = Checks::default();
        for (n, p) in splittings {
            if let Some(reason) = check(s, n, p, &mut c) {
                return skip(reason);
            }
        }
        c.done()
    })
}

fn cor2_10(cx: &Ctx) -> Rows {
    with_splittings(cx, |s, n, _, c| {
        let p = s.p;
        let (z, z2) = (p.center_order, p.second_center_order);
        if z == 1 {
            c.eq("|Cent(G)|", n + 2, p.n_cent);
            c.eq("|2-Cent(G)|", n + 2, p.n_2cent);
        } else if z2 == z {
            c.eq("|Cent(G)|", n + 2, p.n_cent);
            c.eq("|2-Cent(G)|", n + 3, p.n_2cent);
            c.eq("|Cent(G/Z)|", n + 2, p.quotient_n_cent);
            c.eq("|2-Cent(G/Z)|", Some(n + 2), p.quotient_n_2cent);
        } else {
            let zq = z2 / z;
            c.eq("|Cent(G)|", n + 2, p.n_cent);
            c.eq("|2-Cent(G)|", n + 3, p.n_2cent);
            c.holds("|Z(G/Z)| divides n", n % zq == 0);
            c.eq("|Cent(G/Z)|", n / zq + 2, p.quotient_n_cent);
            c.eq("|2-Cent(G/Z)|", Some(n / zq + 3), p.quotient_n_2cent);
        }
        None
    })
}

fn cor2_11(cx: &Ctx) -> Rows {
    with_splittings(cx, |s, _, _, c| {
        if s.centerless() {
            return Some("Z(G) = 1");
        }
        c.iff("primitive n-centralizer", s.p.primitive_n, "Z2(G) = Z(G)", s.p.second_center_order == s.p.center_order);
        None
    })
}

fn cor2_12(cx: &Ctx) -> Rows {
    with_splittings(cx, |s, _, _, c| {
        c.iff("primitive (2,n)-centralizer", s.p.primitive_2n, "Z(G) = 1", s.centerless());
        None
    })
}

fn thm2_13(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        let r = s.p.r.expect("non-abelian groups have r");
        let target = r + 1 + usize::from(!s.centerless());
        let mut c = Checks::default();
        c.iff("CA-group", s.p.is_ca, &format!("|2-Cent(G)| = {target}"), s.p.n_2cent == target);
        c.done()
    })
}

/// `(2,n)`-centralizer iff `rhs`; with `primitive`, also primitive
/// `(2,n)`-centralizer iff `primitive`.
fn classification<R, P>(cx: &Ctx, n: usize, rhs: &str, holds: R, primitive: Option<(&str, P)>) -> Rows
where
    R: Fn(&Ctx, &Subject) -> bool + Sync,
    P: Fn(&Ctx, &Subject) -> bool + Sync,
{
    cx.each_group(|s| {
        let mut c = Checks::default();
        let is_n = s.p.n_2cent == n;
        c.iff(&format!("(2,{n})-centralizer"), is_n, rhs, holds(cx, s));
        if let Some((text, prim)) = &primitive {
            c.iff(&format!("primitive (2,{n})-centralizer"), is_n && s.p.primitive_2n, text, prim(cx, s));
        }
        c.done()
    })
}

type Pred = fn(&Ctx, &Subject) -> bool;

fn class_n1(cx: &Ctx) -> Rows {
    classification::<_, Pred>(cx, 1, "abelian", |_, s| s.abelian(), None)
}

fn class_n2(cx: &Ctx) -> Rows {
    classification::<_, Pred>(cx, 2, "false", |_, _| false, None)
}

fn class_n3(cx: &Ctx) -> Rows {
    classification::<_, Pred>(cx, 3, "false", |_, _| false, None)
}

fn class_n4(cx: &Ctx) -> Rows {
    classification::<_, Pred>(cx, 4, "false", |_, _| false, None)
}

fn class_n5(cx: &Ctx) -> Rows {
    classification(
        cx,
        5,
        "G is S3, or Z != 1 and G/Z is EA(2,2)",
        |cx, s| cx.iso(s.g, &["S(3)"]) || (!s.centerless() && cx.iso(s.q(), &["EA(2,2)"])),
        Some(("G is S3", |cx: &Ctx, s: &Subject| cx.iso(s.g, &["S(3)"]))),
    )
}

fn class_n6(cx: &Ctx) -> Rows {
    classification(
        cx,
        6,
        "G is A4, or Z != 1 and G/Z is EA(3,2) or S3",
        |cx, s| cx.iso(s.g, &["A(4)"]) || (!s.centerless() && cx.iso(s.q(), &["EA(3,2)", "S(3)"])),
        Some(("G is A4", |cx: &Ctx, s: &Subject| cx.iso(s.g, &["A(4)"]))),
    )
}

fn class_n7(cx: &Ctx) -> Rows {
    classification(
        cx,
        7,
        "G is D10 or R, or Z != 1 and |Cent(G)| = 6",
        |cx, s| cx.iso(s.g, &["D(10)", "R"]) || (!s.centerless() && s.p.n_cent == 6),
        Some(("G is D10 or R", |cx: &Ctx, s: &Subject| cx.iso(s.g, &["D(10)", "R"]))),
    )
}

fn class_n8(cx: &Ctx) -> Rows {
    classification(
        cx,
        8,
        "Z != 1 and |Cent(G)| = 7",
        |_, s| !s.centerless() && s.p.n_cent == 7,
        Some(("false", |_: &Ctx, _: &Subject| false)),
    )
}

fn class_n9(cx: &Ctx) -> Rows {
    const WITNESSES: [&str; 3] = ["D(14)", "Hol(7)", "G21"];
    classification(
        cx,
        9,
        "G is D14, Hol(7) or G21, or Z != 1 and |Cent(G)| = 8",
        |cx, s| cx.iso(s.g, &WITNESSES) || (!s.centerless() && s.p.n_cent == 8),
        Some(("G is D14, Hol(7) or G21", |cx: &Ctx, s: &Subject| cx.iso(s.g, &WITNESSES))),
    )
}

fn lem2_15(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if !(s.p.n_cent == 6 && cx.iso(s.q(), &["EA(2,4)"])) {
            return skip(HYPOTHESIS);
        }
        let mut c = Checks::default();
        c.holds("CA-group", s.p.is_ca);
        c.done()
    })
}

fn cor2_16(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.p.n_cent > 9 {
            return skip(format!("|Cent(G)| = {} exceeds 9", s.p.n_cent));
        }
        let mut c = Checks::default();
        c.holds("CA-group", s.p.is_ca);
        c.done()
    })
}

fn lem2_17(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.p.n_2cent > 9 {
            return skip(format!("|2-Cent(G)| = {} exceeds 9", s.p.n_2cent));
        }
        let mut c = Checks::default();
        c.holds("CA-group", s.p.is_ca);
        c.done()
    })
}

fn lem3_1(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if !cx.iso(s.q(), &["A(5)"]) {
            return skip(HYPOTHESIS);
        }
        let mut c = Checks::default();
        let counts = s.p.n_2cent == s.p.n_cent + 1 && [23, 33].contains(&s.p.n_2cent);
        c.holds("G is A5, or |2-Cent(G)| = |Cent(G)| + 1 in {23, 33}", cx.iso(s.g, &["A(5)"]) || counts);
        c.done()
    })
}

fn sec5_solv(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        let mut c = Checks::default();
        if s.p.n_2cent < 22 {
            c.holds("solvable", s.p.solvable);
        } else if s.p.n_2cent == 22 && s.g.is_simple() {
            c.holds("G is A5", cx.iso(s.g, &["A(5)"]));
        } else {
            return skip(HYPOTHESIS);
        }
        c.done()
    })
}

fn sec5_psl(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() || !s.g.is_simple() {
            return skip("not a non-abelian simple group");
        }
        if s.p.n_2cent > 100 {
            return skip(format!("|2-Cent(G)| = {} exceeds 100", s.p.n_2cent));
        }
        let mut c = Checks::default();
        c.holds("G is PSL(2,5), PSL(2,7) or PSL(2,8)", cx.iso(s.g, &["PSL2(5)", "PSL2(7)", "PSL2(8)"]));
        c.done()
    })
}

/// `(p, k)` with `n = p^k`, `k >= 1`.
fn prime_power(n: usize) -> Option<(usize, u32)> {
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut k = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// `1 + p + ... + p^(k-1)`
fn geometric(p: usize, k: u32) -> usize {
    (0..k).map(|i| p.pow(i)).sum()
}

fn proper_centralizer_orders(g: &Group) -> Vec<usize> {
    CentralizerClasses::new(g).centralizers.iter().filter(|c| !c.is_full()).map(|c| c.len()).collect()
}

fn sec5_pgroup(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        let z = s.p.center_order;
        let Some((p, k)) = prime_power(s.p.order / z) else { return skip(HYPOTHESIS) };
        if !proper_centralizer_orders(s.g).iter().all(|&o| o == p * z) {
            return skip(HYPOTHESIS);
        }
        let mut c = Checks::default();
        c.eq("|Cent(G)|", geometric(p, k) + 1, s.p.n_cent);
        c.eq("|2-Cent(G)|", s.p.n_cent + 1, s.p.n_2cent);
        c.done()
    })
}

fn is_elementary_abelian(q: &Group, p: usize) -> bool {
    q.is_abelian() && q.elements().all(|x| q.element_order(x) == 1 || q.element_order(x) == p)
}

fn thm5_7(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        let z = s.p.center_order;
        let Some((p, k)) = prime_power(s.p.order / z) else { return skip(HYPOTHESIS) };
        if !is_elementary_abelian(s.q(), p) {
            return skip(HYPOTHESIS);
        }
        let orders = proper_centralizer_orders(s.g);
        if !orders.iter().all(|&o| o == p * z || o == p * p * z) {
            return skip(HYPOTHESIS);
        }
        let small = orders.iter().filter(|&&o| o == p * z).count();
        let large = orders.len() - small;
        let mut c = Checks::default();
        c.eq("|Cent(G)|", small + large + 1, s.p.n_cent);
        c.eq("|2-Cent(G)|", s.p.n_cent + 1, s.p.n_2cent);
        c.eq("s + t(p + 1)", geometric(p, k), small + large * (p + 1));
        c.done()
    })
}

fn sec6_p4(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        let Some((p, 4)) = prime_power(s.p.order) else { return skip("order is not a fourth prime power") };
        let z = s.p.center_order;
        let mut c = Checks::default();
        let allowed = if z == p {
            vec![p * p + 2, p * p + p + 2]
        } else if z == p * p {
            vec![p + 2]
        } else {
            vec![p + 2, p * p + 2, p * p + p + 2]
        };
        c.holds(&format!("|Cent(G)| in {allowed:?}"), allowed.contains(&s.p.n_cent));
        c.eq("|2-Cent(G)|", s.p.n_cent + 1, s.p.n_2cent);
        c.done()
    })
}

fn sec6_d(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        let q = s.q();
        if q.order() < 6 || q.order() % 2 == 1 {
            return skip(HYPOTHESIS);
        }
        let d = dihedral(q.order()).expect("even order at least 6");
        if crate::isomorphism::fingerprint(&d) != crate::isomorphism::fingerprint(q)
            || crate::isomorphism::find_isomorphism(&d, q).is_none()
        {
            return skip(HYPOTHESIS);
        }
        let n = q.order() / 2;
        let p = s.p;
        let mut c = Checks::default();
        if s.centerless() {
            c.eq("|Cent(G)|", n + 2, p.n_cent);
            c.eq("|2-Cent(G)|", n + 2, p.n_2cent);
        } else {
            c.eq("|Cent(G)|", n + 2, p.n_cent);
            c.eq("|2-Cent(G)|", n + 3, p.n_2cent);
            let (qc, q2) = if n % 2 == 1 { (n + 2, n + 2) } else { (n / 2 + 2, n / 2 + 3) };
            c.eq("|Cent(G/Z)|", qc, p.quotient_n_cent);
            c.eq("|2-Cent(G/Z)|", Some(q2), p.quotient_n_2cent);
        }
        c.done()
    })
}

/// Builds each spec and compares `(|Cent|, |2-Cent|)` with `expected`.
fn family_sweep(cx: &Ctx, cases: Vec<(GroupSpec, usize, usize)>) -> Rows {
    cases
        .into_par_iter()
        .map(|(spec, n_cent, n_2cent)| {
            let name = spec.to_string();
            let outcome = (|| {
                if let Some(reason) = spec.expected_order().and_then(|n| cx.cap_reason(n)) {
                    return Outcome::Skip(reason);
                }
                let g = match spec.build() {
                    Ok(g) => g,
                    Err(e) => return fail("the group builds", e),
                };
                let mut c = Checks::default();
                c.eq("|Cent(G)|", n_cent, CentralizerClasses::new(&g).len());
                c.eq("|2-Cent(G)|", n_2cent, two_cent(&g).map_or(0, |t| t.len()));
                c.done()
            })();
            (name, outcome)
        })
        .collect()
}

const FAMILY_RANGE: std::ops::RangeInclusive<usize> = 2..=8;

fn sec6_sd(cx: &Ctx) -> Rows {
    let cases = FAMILY_RANGE
        .map(|n| {
            let k = if n % 2 == 1 { n + 3 } else { 2 * n + 3 };
            (GroupSpec::Semidihedral(n), k - 1, k)
        })
        .collect();
    family_sweep(cx, cases)
}

fn sec6_t(cx: &Ctx) -> Rows {
    family_sweep(cx, FAMILY_RANGE.map(|n| (GroupSpec::Dicyclic(n), n + 2, n + 3)).collect())
}

fn sec6_v(cx: &Ctx) -> Rows {
    let cases = FAMILY_RANGE
        .map(|n| {
            let k = if n % 2 == 1 { 2 * n + 3 } else { n + 3 };
            (GroupSpec::VGroup(n), k - 1, k)
        })
        .collect();
    family_sweep(cx, cases)
}

fn sec6_u(cx: &Ctx) -> Rows {
    let mut cases = Vec::new();
    for n in 1..=8 {
        for m in 1..=8 {
            let (c, t) = match m {
                1 | 2 => (1, 1),
                _ if m % 2 == 0 => (m / 2 + 2, m / 2 + 3),
                _ if n == 1 => (m + 2, m + 2),
                _ => (m + 2, m + 3),
            };
            cases.push((GroupSpec::UGroup(n, m), c, t));
        }
    }
    family_sweep(cx, cases)
}

fn thm1_1(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        let q = s.q();
        let (nc, prim) = (s.p.n_cent, s.p.primitive_n);
        let mut c = Checks::default();
        c.iff("4-centralizer", nc == 4, "G/Z is EA(2,2)", cx.iso(q, &["EA(2,2)"]));
        c.iff("5-centralizer", nc == 5, "G/Z is EA(3,2) or S3", cx.iso(q, &["EA(3,2)", "S(3)"]));
        c.implies(
            "6-centralizer",
            nc == 6,
            "G/Z is EA(2,3), EA(2,4), D8 or A4",
            cx.iso(q, &["EA(2,3)", "EA(2,4)", "D(8)", "A(4)"]),
        );
        c.iff("primitive 7-centralizer", nc == 7 && prim, "G/Z is D10 or R", cx.iso(q, &["D(10)", "R"]));
        c.iff("7-centralizer", nc == 7, "G/Z is EA(5,2), D10 or R", cx.iso(q, &["EA(5,2)", "D(10)", "R"]));
        c.implies("8-centralizer", nc == 8, "G/Z is EA(2,3), D12 or A4", cx.iso(q, &["EA(2,3)", "D(12)", "A(4)"]));
        c.iff(
            "9-centralizer",
            nc == 9,
            "G/Z is D14, EA(7,2), Hol(7) or G21",
            cx.iso(q, &["D(14)", "EA(7,2)", "Hol(7)", "G21"]),
        );
        c.iff(
            "primitive 9-centralizer",
            nc == 9 && prim,
            "G/Z is D14, Hol(7) or G21",
            cx.iso(q, &["D(14)", "Hol(7)", "G21"]),
        );
        c.done()
    })
}

/// Abelian normal subgroups of prime index in a non-abelian group. Such a
/// subgroup is the centralizer of any of its non-central elements, so only
/// centralizers need to be examined.
fn abelian_normal_prime_index(g: &Group, classes: &CentralizerClasses) -> Vec<crate::ElementSet> {
    classes
        .centralizers
        .iter()
        .filter(|c| {
            !c.is_full()
                && is_prime(g.order() / c.len())
                && c.iter().all(|a| c.iter().all(|b| g.commute(a, b)))
                && g.is_normal(c).unwrap_or(false)
        })
        .cloned()
        .collect()
}

fn prime_factor_count(mut n: usize) -> usize {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    count + usize::from(n > 1)
}

fn thm1_2(cx: &Ctx) -> Rows {
    cx.each_group(|s| {
        if s.abelian() {
            return skip(ABELIAN);
        }
        let (g, p, q) = (s.g, s.p, s.q());
        let r = p.r.expect("non-abelian groups have r");
        let classes = CentralizerClasses::new(g);
        let z = center(g);
        let mut c = Checks::default();

        c.holds("r >= 3", r >= 3);
        c.holds("r + 1 <= |Cent(G)|", r < p.n_cent);
        c.iff("r = 3", r == 3, "|Cent(G)| = 4", p.n_cent == 4);
        c.iff("r = 4", r == 4, "|Cent(G)| = 5", p.n_cent == 5);
        c.iff("CA-group", p.is_ca, "|Cent(G)| = r + 1", p.n_cent == r + 1);

        if cx.iso(q, &["A(5)"]) {
            c.holds("|Cent(G)| in {22, 32}", [22, 32].contains(&p.n_cent));
        }
        if p.n_cent == 22 && g.is_simple() {
            c.holds("simple with |Cent(G)| = 22 implies G is A5", cx.iso(g, &["A(5)"]));
        }
        c.implies("|G/Z| is a product of three primes", prime_factor_count(q.order()) == 3, "CA-group", p.is_ca);
        if let Some((pp, 3)) = prime_power(q.order()) {
            if (2..pp).all(|d| p.order % d != 0) {
                c.holds(
                    "[G:Z] = p^3 gives |Cent(G)| in {p^2 + p + 2, p^2 + 2}",
                    [pp * pp + pp + 2, pp * pp + 2].contains(&p.n_cent),
                );
            }
        }

        let abelian_index_p = abelian_normal_prime_index(g, &classes);
        if !abelian_index_p.is_empty() {
            c.eq("|Cent(G)| with an abelian normal subgroup of prime index", p.derived_order + 2, p.n_cent);
            c.holds("an abelian normal subgroup of prime index makes G CA", p.is_ca);
            for h in &abelian_index_p {
                let index = g.order() / h.len();
                c.eq("|G|", index * p.derived_order * z.len(), g.order());
                let outside_ok = g
                    .elements()
                    .filter(|&x| !h.contains(x))
                    .all(|x| g.order() / classes.centralizers[classes.class_of[x]].len() == p.derived_order);
                c.holds("|G : C(x)| = |G'| outside the abelian subgroup", outside_ok);
            }
        }

        if !q.is_abelian() {
            for (n, pp) in cyclic_by_prime_splittings(q) {
                c.eq(&format!("|Cent(G)| for G/Z = Z_{n} x| Z_{pp}"), n + 2, p.n_cent);
                c.eq(&format!("|G'| for G/Z = Z_{n} x| Z_{pp}"), n, p.derived_order);
                c.holds("G/Z cyclic-by-prime makes G CA", p.is_ca);
                c.holds(
                    "G/Z cyclic-by-prime gives an abelian normal subgroup of that index",
                    abelian_index_p.iter().any(|h| g.order() / h.len() == pp),
                );
            }
        } else if let Some((pp, 2)) = prime_power(q.order()) {
            if is_elementary_abelian(q, pp) {
                c.eq("|Cent(G)| for G/Z = Z_p x Z_p", pp + 2, p.n_cent);
            }
        }

        if p.is_ca {
            let proper: Vec<&crate::ElementSet> = classes.centralizers.iter().filter(|c| !c.is_full()).collect();
            let ok = proper.iter().enumerate().all(|(i, a)| proper[i + 1..].iter().all(|b| a.intersection(b) == z));
            c.holds("distinct proper centralizers of a CA-group meet in Z(G)", ok);
        }
        c.implies("|Cent(G)| <= 21", p.n_cent <= 21, "solvable", p.solvable);
        c.done()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGroupRow {
    pub name: String,
    pub order: usize,
    pub n_2cent: usize,
    /// Earlier entry of the same isomorphism type, if any.
    pub isomorphic_to: Option<String>,
}

/// Whether non-isomorphic non-abelian simple groups have different
/// `|2-Cent|`. Informational only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub version: String,
    pub simple_groups: Vec<SimpleGroupRow>,
    pub skipped: Vec<Skipped>,
    /// Non-isomorphic pairs sharing a count.
    pub collisions: Vec<(String, String)>,
    pub pairwise_distinct: bool,
}

pub fn conjecture_experiment(catalog: &Catalog, order_cap: usize) -> ConjectureReport {
    let mut rows: Vec<SimpleGroupRow> = Vec::new();
    let mut skipped = Vec::new();
    let mut groups: Vec<&Group> = Vec::new();
    for e in catalog.entries() {
        let Some(order) = Ctx::entry_order(e) else { continue };
        if order > order_cap {
            skipped.push(Skipped {
                instance: e.name.clone(),
                reason: format!("order {order} exceeds the cap {order_cap}"),
            });
            continue;
        }
        let Ok(g) = e.group() else { continue };
        if g.is_abelian() || !g.is_simple() {
            continue;
        }
        let Ok(p) = e.profile() else { continue };
        let isomorphic_to = rows
            .iter()
            .zip(&groups)
            .find(|(r, h)| r.isomorphic_to.is_none() && r.order == order && e.is_isomorphic_to(h))
            .map(|(r, _)| r.name.clone());
        rows.push(SimpleGroupRow { name: e.name.clone(), order, n_2cent: p.n_2cent, isomorphic_to });
        groups.push(g);
    }
    let distinct: Vec<&SimpleGroupRow> = rows.iter().filter(|r| r.isomorphic_to.is_none()).collect();
    let mut collisions = Vec::new();
    for (i, a) in distinct.iter().enumerate() {
        for b in &distinct[i + 1..] {
            if a.n_2cent == b.n_2cent {
                collisions.push((a.name.clone(), b.name.clone()));
            }
        }
    }
    ConjectureReport {
        version: REPORT_VERSION.to_string(),
        pairwise_distinct: collisions.is_empty(),
        simple_groups: rows,
        skipped,
        collisions,
    }
}
