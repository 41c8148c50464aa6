//! Gyrogroups, their L-subgyrogroup quotients, and the metric a strongly
//! topological gyrogroup inherits from a dyadic prenorm.
//!
//! The pieces, bottom up:
//!
//! * [`gyro`]: the [`Gyrogroup`] contract and the operations derived from
//!   `⊕`/`⊖` (gyrator identity, left difference, `q` map).
//! * [`axioms`]: seeded or exhaustive verification of G1–G4, the
//!   automorphism law and the difference identities behind the metric.
//! * [`models`]: Möbius disk, Einstein ball, Cayley-table gyrogroups and the
//!   group adapter.
//! * [`base`]: norm balls and the neighborhood chains `r₀ > r₁ > …`.
//! * [`prenorm`]: the dyadic family, the prenorm `N` and `ϱ_N(x, y) = N(⊖x ⊕ y)`.
//! * [`subquotient`]: subgyrogroup predicates, left cosets and `q` images.
//! * [`cli`]: the `gyro` command-line harness.
//!
//! ```
//! use gyrometric::prelude::*;
//!
//! let disk = make_mobius();
//! let chain = build_chain(0.8, 12).unwrap();
//! let family = build_dyadic_family(&chain, 12).unwrap();
//! let x = num_complex::Complex64::new(0.1, 0.2);
//! let y = num_complex::Complex64::new(-0.3, 0.05);
//! let d = gyro_metric(&family, &disk, &x, &y).unwrap();
//! assert_eq!(d, gyro_metric(&family, &disk, &y, &x).unwrap());
//! ```

pub mod axioms;
pub mod base;
pub mod check;
pub mod cli;
pub mod error;
pub mod gyro;
pub mod models;
pub mod prenorm;
pub mod subquotient;

pub use check::{CheckReport, CheckSuite, Witness};
pub use error::{GyroError, Result};
pub use gyro::{Gyrogroup, Radial, Sampling};

pub mod prelude {
    pub use crate::axioms::{check_axioms, check_difference_identities, check_gyrator_weld};
    pub use crate::base::{
        build_chain, check_gyr_invariance, half_radius, scalar_add, symmetrize, GyrInvariantBall,
        NeighborhoodChain,
    };
    pub use crate::check::{CheckReport, CheckSuite};
    pub use crate::error::{GyroError, Result};
    pub use crate::gyro::{Gyrogroup, Radial, Sampling};
    pub use crate::models::{
        cyclic_group, klein_four, make_einstein, make_group_adapter, make_mobius,
        make_table_gyrogroup, validate_table, CayleyTable, EinsteinBall, MobiusDisk,
        TableGyrogroup,
    };
    pub use crate::prenorm::{
        build_dyadic_family, gyration_invariance_check, gyro_metric, metric_axiom_check,
        metric_ball, prenorm, sandwich_check, sub_pseudometric, DyadicFamily,
    };
    pub use crate::subquotient::{
        is_l_subgyrogroup, is_subgyrogroup, left_cosets, q_image, quotient_map, CosetPartition,
        SubgyroCandidate,
    };
}
