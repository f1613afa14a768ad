//! Finite-rank projective modules over a quadratic maximal order, classified
//! by rank and Steinitz class, and the symbolic functor `M ↦ M ⊗_O A` into
//! isomorphism classes of abelian varieties.
//!
//! The functor is only modelled on isomorphism classes. Building `M ⊗_O A`
//! from a presentation `O^m → O^n → M → 0` is not attempted.

use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::error::{Error, Result};
use crate::order::{IdealClass, QuadOrder};

/// `(rank, Steinitz class)` of a projective module; `I₁ ⊕ … ⊕ Iₙ` has rank
/// `n` and class `[I₁]⋯[Iₙ]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleClass {
    rank: u64,
    steinitz: IdealClass,
}

impl ModuleClass {
    pub fn new(rank: u64, steinitz: IdealClass) -> Result<Self> {
        if rank == 0 && !steinitz.is_trivial() {
            return Err(Error::Domain(format!("the zero module has trivial Steinitz class, not {steinitz}")));
        }
        Ok(ModuleClass { rank, steinitz })
    }

    pub fn zero(order: QuadOrder) -> Self {
        ModuleClass { rank: 0, steinitz: IdealClass::identity(order) }
    }

    /// `Oⁿ`.
    pub fn free(order: QuadOrder, rank: u64) -> Self {
        ModuleClass { rank, steinitz: IdealClass::identity(order) }
    }

    /// A fractional ideal of the given class, as a rank-one module.
    pub fn of_ideal(class: IdealClass) -> Self {
        ModuleClass { rank: 1, steinitz: class }
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn steinitz(&self) -> &IdealClass {
        &self.steinitz
    }

    pub fn order(&self) -> QuadOrder {
        self.steinitz.order()
    }

    pub fn is_free(&self) -> bool {
        self.steinitz.is_trivial()
    }

    pub fn direct_sum(&self, other: &ModuleClass) -> Result<ModuleClass> {
        if self.order() != other.order() {
            return Err(Error::ParameterMismatch(format!(
                "modules over {} and {} cannot be added",
                self.order(),
                other.order()
            )));
        }
        Ok(ModuleClass { rank: self.rank + other.rank, steinitz: self.steinitz.mul(&other.steinitz)? })
    }
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_free() {
            write!(f, "({}, triv)", self.rank)
        } else {
            write!(f, "({}, {})", self.rank, self.steinitz)
        }
    }
}

/// Module class of `I₁ ⊕ … ⊕ Iₙ` for ideals with the given classes.
pub fn class_of_ideal_sum(order: QuadOrder, classes: &[IdealClass]) -> Result<ModuleClass> {
    classes
        .iter()
        .try_fold(ModuleClass::zero(order), |acc, c| acc.direct_sum(&ModuleClass::of_ideal(c.clone())))
}

/// Name of the fixed abelian variety `A` with `End(A) = O`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseTag(pub String);

impl fmt::Display for BaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Isomorphism class of `M ⊗_O A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AVClass {
    base: BaseTag,
    module: ModuleClass,
}

impl AVClass {
    pub fn base(&self) -> &BaseTag {
        &self.base
    }

    pub fn module(&self) -> &ModuleClass {
        &self.module
    }

    /// `M ⊗_O A` is zero exactly when `M` is.
    pub fn is_zero_variety(&self) -> bool {
        self.module.rank == 0
    }

    /// Product of abelian varieties, the image of the direct sum of modules.
    pub fn product(&self, other: &AVClass) -> Result<AVClass> {
        if self.base != other.base {
            return Err(Error::ParameterMismatch(format!(
                "abelian varieties built on {} and {} cannot be multiplied",
                self.base, other.base
            )));
        }
        Ok(AVClass { base: self.base.clone(), module: self.module.direct_sum(&other.module)? })
    }
}

impl fmt::Display for AVClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.module, self.base)
    }
}

/// `T(M) = M ⊗_O A`.
pub fn tensor_av(m: &ModuleClass, base: &BaseTag) -> AVClass {
    AVClass { base: base.clone(), module: m.clone() }
}
