//! Reference values of `w(2;3,t)` and `vdw_pd(2;3,t)`.

use serde::{Deserialize, Serialize};

/// How far a tabulated value is established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Proven exact.
    Exact,
    /// A certified lower bound (a good partition exists one below).
    LowerBound,
}

/// `w(2; 3, t)` or a lower bound for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VdwEntry {
    pub t: usize,
    pub value: usize,
    pub status: Status,
}

/// `vdw_pd(2; 3, t) = (p, q)` or lower bounds for both components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdEntry {
    pub t: usize,
    pub p: usize,
    pub q: usize,
    pub status: Status,
}

impl PdEntry {
    pub fn span(&self) -> usize {
        self.q - self.p
    }
}

/// Qualifier of a derived quantity such as the gap `w - q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Qualifier {
    Exact,
    /// The true value is at least this (the `w` entry is a lower bound).
    AtLeast,
    /// Both inputs are lower bounds; the value may move either way.
    Approximate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    pub value: i64,
    pub qualifier: Qualifier,
}

impl std::fmt::Display for Derived {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.qualifier {
            Qualifier::Exact => write!(f, "{}", self.value),
            Qualifier::AtLeast => write!(f, ">={}", self.value),
            Qualifier::Approximate => write!(f, "~{}", self.value),
        }
    }
}

/// The embedded tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownValues {
    pub vdw: Vec<VdwEntry>,
    pub pd: Vec<PdEntry>,
}

const VDW_EXACT: [usize; 17] =
    [9, 18, 22, 32, 46, 58, 77, 97, 114, 135, 160, 186, 218, 238, 279, 312, 349];
const VDW_LOWER: [usize; 20] = [
    389, 416, 464, 516, 593, 656, 727, 770, 827, 868, 903, 931, 1007, 1064, 1144, 1205, 1258,
    1339, 1379, 1419,
];
const PD_EXACT: [(usize, usize); 23] = [
    (6, 9),
    (15, 16),
    (16, 21),
    (30, 31),
    (41, 44),
    (52, 57),
    (62, 77),
    (93, 94),
    (110, 113),
    (126, 135),
    (142, 155),
    (174, 183),
    (200, 205),
    (232, 237),
    (256, 279),
    (299, 312),
    (338, 347),
    (380, 389),
    (400, 405),
    (444, 463),
    (506, 507),
    (568, 593),
    (586, 607),
];
const PD_LOWER: [(usize, usize); 14] = [
    (634, 643),
    (664, 699),
    (728, 743),
    (810, 821),
    (844, 855),
    (916, 931),
    (958, 963),
    (996, 1005),
    (1054, 1081),
    (1114, 1155),
    (1186, 1213),
    (1272, 1295),
    (1336, 1369),
    (1406, 1411),
];

/// The reference tables: `w(2;3,t)` exact for `t = 3..=19`, lower bounds
/// for `20..=39`; `vdw_pd(2;3,t)` exact for `3..=25`, lower bounds for
/// `26..=39`.
pub fn known_values() -> KnownValues {
    let vdw = VDW_EXACT
        .iter()
        .enumerate()
        .map(|(i, &value)| VdwEntry { t: i + 3, value, status: Status::Exact })
        .chain(VDW_LOWER.iter().enumerate().map(|(i, &value)| VdwEntry {
            t: i + 20,
            value,
            status: Status::LowerBound,
        }))
        .collect();
    let pd = PD_EXACT
        .iter()
        .enumerate()
        .map(|(i, &(p, q))| PdEntry { t: i + 3, p, q, status: Status::Exact })
        .chain(PD_LOWER.iter().enumerate().map(|(i, &(p, q))| PdEntry {
            t: i + 26,
            p,
            q,
            status: Status::LowerBound,
        }))
        .collect();
    KnownValues { vdw, pd }
}

impl KnownValues {
    /// Entry for `w(2; t0, t)`; only `t0 = 3` is tabulated.
    pub fn vdw(&self, t0: usize, t: usize) -> Option<VdwEntry> {
        (t0 == 3).then(|| self.vdw.iter().find(|e| e.t == t).copied()).flatten()
    }

    pub fn vdw_exact(&self, t0: usize, t: usize) -> Option<usize> {
        self.vdw(t0, t).filter(|e| e.status == Status::Exact).map(|e| e.value)
    }

    pub fn pd(&self, t0: usize, t: usize) -> Option<PdEntry> {
        (t0 == 3).then(|| self.pd.iter().find(|e| e.t == t).copied()).flatten()
    }

    /// Palindromic span `q - p`.
    pub fn span(&self, t0: usize, t: usize) -> Option<Derived> {
        let e = self.pd(t0, t)?;
        let qualifier = match e.status {
            Status::Exact => Qualifier::Exact,
            Status::LowerBound => Qualifier::Approximate,
        };
        Some(Derived { value: e.span() as i64, qualifier })
    }

    /// Palindromic gap `w - q`.
    pub fn gap(&self, t0: usize, t: usize) -> Option<Derived> {
        let e = self.pd(t0, t)?;
        let w = self.vdw(t0, t)?;
        let qualifier = match (e.status, w.status) {
            (Status::Exact, Status::Exact) => Qualifier::Exact,
            (Status::Exact, Status::LowerBound) => Qualifier::AtLeast,
            (Status::LowerBound, _) => Qualifier::Approximate,
        };
        Some(Derived { value: w.value as i64 - e.q as i64, qualifier })
    }
}
