//! Hofstadter's figure-figure sequences.
//!
//! [`seqcore`] streams exact rows `(n, a_n, b_n, u_n)`, [`asymptotics`]
//! holds the exact series coefficients and evaluates truncated series,
//! [`diagnostics`] checks identities and bounds over index ranges and
//! tabulates series remainders, and [`cli_io`] provides b-file I/O and the
//! `figfig` command line.

pub mod asymptotics;
pub mod cli_io;
pub mod diagnostics;
pub mod error;
pub mod seqcore;

pub use asymptotics::{
    a_coeff, alpha, eval_a_series, eval_b_series, eval_series, eval_u_series, root_pow, Rational,
    SeriesOrder,
};
pub use cli_io::run_cli;
pub use diagnostics::{
    check_bounds, check_identities, check_partition, remainder_table, CheckReport, RemainderRow,
};
pub use error::{Error, Result};
pub use seqcore::{new_state, take, value_at, GenState, SeqId, Triple};
