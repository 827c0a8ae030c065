//! Drivers computing `w(2;t0,t1)` and `vdw_pd(2;t0,t1)`, reference tables,
//! and growth checks.

mod drivers;
mod growth;
mod known;

pub use drivers::{
    certify_pd, compute_pd, compute_vdw, ComputeLimits, Engine, InstanceRecord, PdCertificateBundle,
    PdNumber, PdResult, SatProfile, Strategy, VdwResult,
};
pub use growth::{check_growth_bounds, check_growth_bounds_with, GrowthReport, GrowthRow, SQUARE_BOUND_FROM};
pub use known::{known_values, Derived, KnownValues, PdEntry, Qualifier, Status, VdwEntry};
