//! Parser, renderers and the `lexbs` command line.

pub mod app;
pub mod parse;
pub mod render;

pub use app::run;
pub use parse::{parse_ideal, IdealExpr};
pub use render::{render_betti, render_decomposition, Normalization};
