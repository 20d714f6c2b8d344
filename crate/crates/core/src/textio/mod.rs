//! Operator text format: parser with positioned errors and the two
//! renderers (theta-style text and versioned machine records).

pub mod lexer;
pub mod parser;
pub mod render;

pub use parser::{parse_diffop, parse_n_poly, parse_operator, AlgebraKind};
pub use render::{
    parse_machine, render_diffop, render_diffop_machine, render_machine, render_theta, Style,
};
