//! a-invariants and Hilbert series of ladder determinantal rings through
//! NE-turns of non-intersecting lattice path families.
//!
//! Points are `(x, y)` with `0 <= x <= B` and `0 <= y <= A`; matrix entry
//! `(i, j)` of the `(A+1) x (B+1)` matrix sits at `(j, A - i)`.

pub mod ainv;
pub mod error;
pub mod hilbert;
pub mod oracle;
pub mod paths;
pub mod region;
pub mod turns;

pub use ainv::{a_invariant, AInvariantReport, AssumptionFlags, Method};
pub use error::{Error, Result};
pub use hilbert::{hilbert_coefficient, hilbert_numerator, IntPolynomial};
pub use oracle::{enumerate_paths, gf_families, max_ne_single, FamilyConstraint, OracleLimits};
pub use paths::{LatticePath, Minor, Step};
pub use region::{BoundaryData, Corner, CornerSide, LadderRegion, Point};
pub use turns::{slalom, GateConstraints, GateLabel, GatePoint, SlalomTrace};
