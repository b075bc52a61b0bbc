pub mod cli;
pub mod cyclic_oracle;
pub mod error;
pub mod exactlin;
pub mod expansion;
pub mod glue;
pub mod kronecker;
pub mod quiver;
pub mod tube;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/kronecker.md")]
    mod kronecker {}
    #[doc = include_str!("../../../book/src/kronecker-gluing.md")]
    mod kronecker_gluing {}
    #[doc = include_str!("../../../book/src/tubes.md")]
    mod tubes {}
    #[doc = include_str!("../../../book/src/expansion.md")]
    mod expansion {}
    #[doc = include_str!("../../../book/src/tube-gluing.md")]
    mod tube_gluing {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
