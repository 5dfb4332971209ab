//! Exact symbolic computation for symmetric polynomials: Jack and Macdonald
//! bases over rational-function fields, majorization orders, and positivity
//! certificates (cone membership, Muirhead cone/semiring decompositions).

pub mod error;
pub mod field;
pub mod fp;
pub mod gcd;
pub mod jack;
pub mod macdonald;
pub mod orth;
pub mod parse;
pub mod partitions;
pub mod poly;
pub mod rat;
pub mod ratfunc;

pub mod sturm;
pub mod symfunc;

pub use error::Error;
pub use partitions::{Cell, Partition};
pub use poly::{Poly, Vars};
pub use rat::Rat;
pub use ratfunc::RatFunc;
