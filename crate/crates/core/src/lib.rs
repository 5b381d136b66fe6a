//! Exact combinatorics of λ-unimodal cyclic permutations and primitive necklaces.
//!
//! The library computes, with exact integer arithmetic throughout:
//!
//! * permutation statistics (descent sets, cyclicity, λ-unimodality) and
//!   enumeration of the λ-unimodal cyclic permutations `C(λ)` ([`perm`]);
//! * necklaces over a `2k`-letter alphabet, the sets `N_λ` and `N_λ^(m)`,
//!   and the `ppat` map onto `C(λ)` together with its fibers ([`necklace`]);
//! * closed-form counts: the Möbius function, primitive-necklace counts,
//!   the induced-character values `χ_λ`, and the inversion recovering
//!   `|C_λ(m)|` from necklace counts ([`counting`]);
//! * standard Young tableaux, RSK, Murnaghan–Nakayama character values,
//!   and the multiplicities of the induced representation ([`tableaux`]);
//! * named identity checks pairing each closed form with an independent
//!   brute-force enumeration, reported as structured pass/fail records
//!   ([`verify`], [`report`]).
//!
//! Everything is deterministic: enumerations have a fixed order and reports
//! serialize to stable JSON, so results are reproducible byte for byte.

pub mod counting;
pub mod necklace;
pub mod perm;
pub mod report;
pub mod tableaux;
pub mod verify;

pub use counting::ExactInt;
pub use perm::{Composition, DescentSet, Permutation};
pub use report::VerificationReport;
