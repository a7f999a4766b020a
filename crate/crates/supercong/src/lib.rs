//! Exact-arithmetic verification of binomial-sum sequence identities and
//! supercongruences.
//!
//! The crate computes the Franel, Apery, and central-binomial sequence
//! families (scalar and polynomial forms, plus q-analogues), and runs a
//! catalog of named checks over them: exact identities, congruences
//! modulo prime powers, and open conjectures scanned for counterexamples.
//! Every computation is exact; there is no floating point anywhere.
//!
//! ```
//! use supercong::seq::{seq_value, SeqId};
//!
//! // g_4 = sum_k C(4,k)^2 C(2k,k) = 639
//! assert_eq!(seq_value(SeqId::G, 4).unwrap().to_string(), "639");
//! ```

pub mod check;
pub mod cli;
pub mod error;
pub mod guide;
pub mod exact;
pub mod modular;
pub mod poly;
pub mod qseries;
pub mod report;
pub mod seq;

pub use cli::run_cli;
pub use error::Error;
