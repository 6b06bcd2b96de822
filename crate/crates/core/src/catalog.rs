//! The named groups every verifier runs over, with lazily built groups and
//! cached invariants.

use std::sync::{Arc, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::centralizers::{cent_profile, center, CentProfile, CentralizerError};
use crate::constructions::{parse_spec, ConstructionError, GroupSpec};
use crate::group::Group;
use crate::isomorphism::{find_isomorphism, fingerprint, Fingerprint, DEFAULT_ISOMORPHISM_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("duplicate catalog entry {0:?}")]
    DuplicateEntry(String),
    #[error("catalog spec {text:?} does not parse: {message}")]
    BadSpec { text: String, message: String },
}

/// Default entries in identification order: when several entries are
/// isomorphic, identification reports the first. Notes name the earlier
/// isomorphic entry.
const DEFAULT_ENTRIES: &[(&str, Option<&str>)] = &[
    ("C(1)", None),
    ("C(2)", None),
    ("C(3)", None),
    ("C(4)", None),
    ("C(5)", None),
    ("C(6)", None),
    ("C(7)", None),
    ("C(8)", None),
    ("C(9)", None),
    ("C(10)", None),
    ("C(11)", None),
    ("C(12)", None),
    ("EA(2,2)", None),
    ("EA(2,3)", None),
    ("EA(2,4)", None),
    ("EA(3,2)", None),
    ("EA(5,2)", None),
    ("EA(7,2)", None),
    ("S(3)", None),
    ("S(4)", None),
    ("A(4)", None),
    ("A(5)", None),
    ("D(6)", Some("isomorphic to S(3)")),
    ("D(8)", None),
    ("D(10)", None),
    ("D(12)", None),
    ("D(14)", None),
    ("D(16)", None),
    ("D(20)", None),
    ("D(24)", None),
    ("SD(2)", None),
    ("SD(3)", None),
    ("SD(4)", None),
    ("SD(5)", None),
    ("SD(6)", None),
    ("T(2)", Some("quaternion group")),
    ("T(3)", None),
    ("T(4)", None),
    ("T(5)", None),
    ("T(6)", None),
    ("T(7)", None),
    ("T(8)", None),
    ("V(1)", Some("isomorphic to D(8)")),
    ("V(2)", None),
    ("V(3)", None),
    ("V(4)", None),
    ("V(5)", None),
    ("V(6)", None),
    ("U(1,3)", Some("isomorphic to S(3)")),
    ("U(1,4)", Some("isomorphic to D(8)")),
    ("U(1,5)", Some("isomorphic to D(10)")),
    ("U(1,6)", Some("isomorphic to D(12)")),
    ("U(2,3)", Some("isomorphic to T(3)")),
    ("U(2,4)", None),
    ("U(2,5)", Some("isomorphic to T(5)")),
    ("U(2,6)", None),
    ("U(3,3)", None),
    ("U(3,4)", None),
    ("U(3,5)", None),
    ("U(3,6)", None),
    ("Hol(7)", None),
    ("R", None),
    ("G21", None),
    ("Heis(3)", Some("extraspecial of exponent 3")),
    ("PSL2(5)", Some("isomorphic to A(5)")),
    ("PSL2(7)", None),
    ("PSL2(8)", None),
    ("sdp(9,3,4)", Some("extraspecial of exponent 9")),
    ("sdp(8,2,5)", Some("modular group of order 16")),
    ("sdp(4,4,3)", Some("isomorphic to U(2,4)")),
    ("sdp(13,3,3)", None),
    ("sdp(11,5,3)", None),
    ("sdp(27,3,10)", None),
    ("prod(Heis(3),C(3))", None),
    ("prod(S(3),C(2))", Some("isomorphic to D(12)")),
    ("prod(D(8),C(2))", None),
    ("prod(T(2),C(2))", None),
    ("prod(S(3),S(3))", None),
    ("prod(D(8),C(3))", Some("isomorphic to U(3,4)")),
    ("prod(A(4),C(2))", None),
    ("prod(D(10),C(2))", Some("isomorphic to D(20)")),
    ("prod(R,C(2))", None),
    ("prod(A(5),C(2))", None),
    ("prod(S(4),C(2))", None),
    ("S(5)", None),
    ("A(6)", None),
    ("Hol(5)", Some("isomorphic to R")),
    ("Hol(9)", None),
];

pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub note: Option<String>,
    group: OnceLock<Result<Arc<Group>, ConstructionError>>,
    fingerprint: OnceLock<Fingerprint>,
    profile: OnceLock<Result<CentProfile, CentralizerError>>,
    central_quotient: OnceLock<Arc<Group>>,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("name", &self.name).finish()
    }
}

impl CatalogEntry {
    pub fn new(spec: GroupSpec, note: Option<String>) -> Self {
        Self {
            name: spec.to_string(),
            spec,
            note,
            group: OnceLock::new(),
            fingerprint: OnceLock::new(),
            profile: OnceLock::new(),
            central_quotient: OnceLock::new(),
        }
    }

    /// Order known without building, if the spec determines it.
    pub fn expected_order(&self) -> Option<usize> {
        self.spec.expected_order()
    }

    pub fn group(&self) -> Result<&Group, ConstructionError> {
        match self.group.get_or_init(|| self.spec.build().map(Arc::new)) {
            Ok(g) => Ok(g),
            Err(e) => Err(e.clone()),
        }
    }

    /// Order of the built group.
    pub fn order(&self) -> Result<usize, ConstructionError> {
        Ok(self.group()?.order())
    }

    pub fn fingerprint(&self) -> Result<&Fingerprint, ConstructionError> {
        let g = self.group()?;
        Ok(self.fingerprint.get_or_init(|| fingerprint(g)))
    }

    pub fn profile(&self) -> Result<&CentProfile, ProfileError> {
        let g = self.group()?;
        match self.profile.get_or_init(|| cent_profile(g, &self.name)) {
            Ok(p) => Ok(p),
            Err(e) => Err(ProfileError::Centralizer(e.clone())),
        }
    }

    /// Whether `g` is isomorphic to this entry's group.
    pub fn is_isomorphic_to(&self, g: &Group) -> bool {
        entry_matches(self, g, &OnceLock::new())
    }

    /// `G / Z(G)`
    pub fn central_quotient(&self) -> Result<&Group, ConstructionError> {
        let g = self.group()?;
        Ok(self.central_quotient.get_or_init(|| Arc::new(g.quotient(&center(g)).expect("the center is normal"))))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
}

/// Row of the `catalog` listing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogRow {
    pub name: String,
    pub spec: String,
    pub order: Option<usize>,
    pub note: String,
}

#[derive(Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Default for Catalog {
    fn default() -> Self {
        let entries = DEFAULT_ENTRIES
            .iter()
            .map(|&(text, note)| {
                let spec = parse_spec(text).expect("default catalog specs parse");
                CatalogEntry::new(spec, note.map(str::to_string))
            })
            .collect();
        Self { entries }
    }
}

impl Catalog {
    pub fn from_specs(specs: Vec<GroupSpec>) -> Result<Self, CatalogError> {
        let mut names = std::collections::HashSet::new();
        let mut entries = Vec::with_capacity(specs.len());
        for spec in specs {
            let entry = CatalogEntry::new(spec, None);
            if !names.insert(entry.name.clone()) {
                return Err(CatalogError::DuplicateEntry(entry.name));
            }
            entries.push(entry);
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Looks an entry up by name; names are compared after parsing, so
    /// whitespace differences do not matter.
    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        let canonical = parse_spec(name).map(|s| s.to_string()).unwrap_or_else(|_| name.to_string());
        self.entries.iter().find(|e| e.name == canonical)
    }

    /// Entries named in `names`, in catalog order.
    pub fn select(&self, names: &[String]) -> Result<Vec<&CatalogEntry>, CatalogError> {
        let mut picked = Vec::with_capacity(names.len());
        for n in names {
            picked.push(self.get(n).ok_or_else(|| CatalogError::UnknownEntry(n.clone()))?.name.clone());
        }
        Ok(self.entries.iter().filter(|e| picked.contains(&e.name)).collect())
    }

    pub fn rows(&self) -> Vec<CatalogRow> {
        self.entries
            .iter()
            .map(|e| CatalogRow {
                name: e.name.clone(),
                spec: e.spec.to_string(),
                order: e.expected_order(),
                note: e.note.clone().unwrap_or_default(),
            })
            .collect()
    }

    /// Name of the first entry isomorphic to `g`.
    pub fn identify(&self, g: &Group) -> Option<&str> {
        if g.order() > DEFAULT_ISOMORPHISM_CAP {
            return None;
        }
        let fg = OnceLock::new();
        self.entries
            .iter()
            .filter(|e| e.expected_order().is_none_or(|n| n == g.order()))
            .find(|e| entry_matches(e, g, &fg))
            .map(|e| e.name.as_str())
    }

    /// Whether `g` is isomorphic to the named entry.
    pub fn is(&self, g: &Group, name: &str) -> bool {
        let entry = self.get(name).unwrap_or_else(|| panic!("no catalog entry {name}"));
        entry_matches(entry, g, &OnceLock::new())
    }

    /// Whether `g` is isomorphic to any of the named entries.
    pub fn is_any(&self, g: &Group, names: &[&str]) -> bool {
        let fg = OnceLock::new();
        names.iter().any(|n| {
            let entry = self.get(n).unwrap_or_else(|| panic!("no catalog entry {n}"));
            entry_matches(entry, g, &fg)
        })
    }
}

fn entry_matches(entry: &CatalogEntry, g: &Group, fg: &OnceLock<Fingerprint>) -> bool {
    let Ok(h) = entry.group() else { return false };
    if h.order() != g.order() || h.order() > DEFAULT_ISOMORPHISM_CAP {
        return false;
    }
    let Ok(fh) = entry.fingerprint() else { return false };
    fg.get_or_init(|| fingerprint(g)) == fh && find_isomorphism(h, g).is_some()
}

pub fn identify_in_catalog<'a>(catalog: &'a Catalog, g: &Group) -> Option<&'a str> {
    catalog.identify(g)
}
