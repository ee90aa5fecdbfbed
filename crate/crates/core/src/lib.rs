//! Centrosymmetric permutations avoiding `123` or `132`, a bijection between
//! `C_{2n}(123)` and Dyck prefixes of length `2n`, and exact bivariate
//! generating functions for their descent distributions.

pub mod bijection;
pub mod classes;
pub mod decomposition;
pub mod oracle;
pub mod path;
pub mod perm;
pub mod series;
pub mod verify;

pub use bijection::{phi, phi_inverse, BijectionError};
pub use decomposition::MinimaDecomposition;
pub use oracle::{ClassSpec, OracleLimits, Subclass};
pub use path::{LatticePath, PathError, Step};
pub use perm::{PermError, Permutation};
pub use series::{BivariateSeries, SeriesError};
