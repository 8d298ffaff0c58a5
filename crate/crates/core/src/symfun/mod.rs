//! Schur-basis symmetric functions: products, coproducts, the Hall inner
//! product, determinantal expansions, characters and the character-formula
//! Kronecker coefficient.

mod character;
mod giambelli;
mod vector;

pub use character::{
    character, factorial, global_cache, kronecker_coefficient_oracle, CacheFile, CharacterCache,
    CharacterTable, CycleType, DEFAULT_CACHE_DEGREE,
};
pub use giambelli::{giambelli_leibniz, jacobi_trudi, HMonomial, SignedHookProduct};
pub use vector::{coproduct, hall_inner, kronecker_product, schur_product, SchurVector};
