//! Exact group-determinant identities for permutation statistics.
//!
//! The library builds the group matrix `(w(u v^{-1}))_{u,v in G}` for a finite
//! group `G` and a monomial weight `w`, computes its determinant exactly over
//! `Z[vars]` (or modularly at random points for the larger groups), and checks
//! the result against closed-form factored products.  Supported weight
//! statistics: the major index on `S_n`, its flag/alternating colored variants
//! on the wreath products `Z_m wr S_n`, the type-A/type-B major indices and
//! negative-entry statistics on signed permutations, and rotation/reflection
//! counts on dihedral groups.  A representation-theoretic layer computes the
//! characteristic polynomials `det(I - qM)` that drive the factorizations,
//! including the irreducible `S_n` blocks via cyclic exponents of standard
//! Young tableaux.

pub mod bases;
pub mod colored;
pub mod formulas;
pub mod groups;
pub mod matrix;
pub mod poly;
pub mod repr;
pub mod signed;
pub mod tableaux;
pub mod verify;
