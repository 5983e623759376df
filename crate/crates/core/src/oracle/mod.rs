//! Ground truth over small finite rings: rings as full tables, dilatations
//! built from symbols and as subrings of the localization, module
//! dilatations, and exhaustive hom scans.
//!
//! For a finite ring the localization at `f` is `e·A` with `e = f^t` the
//! idempotent power of `f`. The equivalence of symbols is decided with the
//! witness `β = (t, …, t)`: `a^β = f^t = e`, and `e·x = 0` is exactly the
//! `f`-power torsion.

mod bridge;
mod dilate;
mod module;
mod ring;
mod scan;

pub use bridge::{compare_with_symbolic, enumerate_center};
pub use dilate::{
    dilate_oracle_fractions, dilate_oracle_subring, exceptional_checks, localize_finite, FiniteCenter, FractionDilatation,
    Localization, OracleDilatation, OracleGenerator, Symbol,
};
pub use module::{module_dilate_oracle, DilatedModule, FiniteModule};
pub use ring::{certify_iso, evaluate, is_ring_hom, FiniteRing, DEFAULT_SIZE_CAP};
pub use scan::{preservation_checks, universal_property_scan, CATALOG_RING_CAP};
