//! Exact-arithmetic symmetric-function calculus over Q(q,t).
//!
//! The crate implements, at desk scale and with zero tolerance for numerical
//! slack:
//!
//! * canonical rational-function arithmetic in `q,t` ([`exactalg`]);
//! * partitions, tableaux and symmetric-group characters ([`combinat`]);
//! * the five classical bases of the ring of symmetric functions with both
//!   scalar products and the bridge to Gessel fundamentals ([`symfun`]);
//! * plethystic substitution and the `Omega` exponential ([`pleth`]);
//! * modified Macdonald polynomials and the nabla operator ([`macdonald`]);
//! * Hall-Littlewood creation operators `C_a` and their adjoints ([`hallops`]);
//! * parking functions with area/dinv/touch statistics ([`parking`]);
//! * a registry of named identity checks tying all of the above together
//!   ([`identities`]).
//!
//! Data-parallel inner loops (parking-function sweeps, Macdonald tables,
//! identity batches) run on rayon when the default `parallel` feature is
//! enabled and fall back to sequential loops without it.

pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod hallops;
pub mod identities;
pub mod macdonald;
pub mod parking;
pub mod pleth;
pub mod symfun;
pub mod util;

pub use error::{AlgError, Result};
