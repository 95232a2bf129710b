//! Jacobi polynomials of linear codes over finite fields, the designs held by
//! their codewords, and the Molien series that bound the space they live in.
//!
//! ```
//! use jacobi_codes::code::LinearCode;
//! use jacobi_codes::jacobi::jacobi_set;
//! use jacobi_codes::poly::Style;
//!
//! let c = LinearCode::catalog("tetracode").unwrap();
//! assert_eq!(jacobi_set(&c, &[1]).unwrap().render(Style::Styled), "w(x^3+2y^3)+6zxy^2");
//! ```

pub mod cli;
pub mod code;
pub mod cyclo;
pub mod design;
mod expr;
pub mod field;
pub mod jacobi;
pub mod molien;
pub mod poly;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/jacobi.md")]
    mod jacobi {}
    #[doc = include_str!("../../../book/src/polarization.md")]
    mod polarization {}
    #[doc = include_str!("../../../book/src/designs.md")]
    mod designs {}
    #[doc = include_str!("../../../book/src/molien.md")]
    mod molien {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
