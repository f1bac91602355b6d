//! Characters of symmetric groups and of the spin algebras of types B and D.

mod charmap;
mod classes;
mod mn;
mod modules;

pub use charmap::*;
pub use classes::*;
pub(crate) use mn::chi;
pub use mn::chi_sn;
pub use modules::*;
