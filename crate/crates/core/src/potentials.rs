//! The pseudoharmonic and Mie-type potential families.
//!
//! Both families carry `lambda = ħ²/2m` alongside their coefficients so that
//! every downstream formula has a single unit pathway. In natural units
//! (`ħ = m = 1`) `lambda` is one half.

use crate::error::{domain, Result};
use crate::scalar::Real;
use crate::units::{MoleculeSpec, UnitSystem};

/// Leading terms `V(r) ≈ inverse_square/r² + inverse/r + constant` as `r → 0⁺`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearOrigin<T> {
    pub inverse_square: T,
    pub inverse: T,
    pub constant: T,
}

/// A central potential that can be handed to the shooting solver.
pub trait RadialPotential<T: Real>: Sync {
    fn value(&self, r: T) -> T;

    /// Small-`r` expansion, used to seed outward integration.
    fn near_origin(&self) -> NearOrigin<T>;

    /// `lim V(r)` as `r → ∞`, or `None` for confining potentials.
    fn asymptote(&self) -> Option<T>;

    /// A length on which the potential varies appreciably.
    fn length_scale(&self) -> T;
}

/// `V(r) = a1 r² + a2 / r² + a3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoharmonicParams<T> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub lambda: T,
}

/// `V(r) = a / r² + b / r + c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MieParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub lambda: T,
}

/// `μ` and `ν` of the pseudoharmonic problem for a given `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedPseudoharmonic<T> {
    /// `μ = sqrt(a1 / lambda)`, inverse length squared.
    pub mu: T,
    /// Root `ν ≥ -1/2` of `ν(ν+1) = a2/lambda + ℓ(ℓ+1)`.
    pub nu: T,
    pub ell: u32,
}

/// `γ` and `δ²` of the Mie problem for a given `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedMie<T> {
    /// `γ = sqrt(a/lambda + ℓ(ℓ+1) + 1/4) ≥ 0`.
    pub gamma: T,
    /// `δ² = b / lambda`, inverse length. Negative for attractive `b`.
    pub delta_sq: T,
    pub ell: u32,
}

fn check_finite<T: Real>(what: &str, v: T) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("{what} must be finite, got {v}")))
    }
}

fn check_lambda<T: Real>(lambda: T) -> Result<()> {
    if lambda.is_finite() && lambda > T::zero() {
        Ok(())
    } else {
        Err(domain(format!("lambda = ħ²/2m must be positive, got {lambda}")))
    }
}

fn check_radius<T: Real>(r: T) -> Result<()> {
    if r > T::zero() && r.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("radius must be positive, got {r}")))
    }
}

#[inline]
fn centrifugal<T: Real>(ell: u32) -> T {
    let l = T::from_count(ell);
    l * (l + T::one())
}

impl<T: Real> PseudoharmonicParams<T> {
    /// Rejects `a1 ≤ 0`, for which the spectrum is not discrete.
    pub fn new(a1: T, a2: T, a3: T, lambda: T) -> Result<Self> {
        check_finite("a1", a1)?;
        check_finite("a2", a2)?;
        check_finite("a3", a3)?;
        check_lambda(lambda)?;
        if a1 <= T::zero() {
            return Err(domain(format!("a1 must be positive for bound states, got {a1}")));
        }
        Ok(Self { a1, a2, a3, lambda })
    }

    /// `a1 = D/r0²`, `a2 = D r0²`, `a3 = -2D`: zero minimum at `r0`.
    pub fn from_molecule(mol: &MoleculeSpec, units: &UnitSystem<T>) -> Result<Self> {
        mol.validate()?;
        let d = mol.depth(units);
        let r0: T = mol.r0();
        Self::new(d / (r0 * r0), d * r0 * r0, -T::lit(2.0) * d, mol.lambda(units)?)
    }

    /// Three-dimensional isotropic oscillator `V = m ω² r² / 2` in natural units.
    pub fn oscillator(omega: T) -> Result<Self> {
        let half = T::lit(0.5);
        Self::new(half * omega * omega, T::zero(), T::zero(), half)
    }

    pub fn eval(&self, r: T) -> Result<T> {
        check_radius(r)?;
        Ok(self.value_unchecked(r))
    }

    #[inline]
    pub(crate) fn value_unchecked(&self, r: T) -> T {
        let r2 = r * r;
        self.a1 * r2 + self.a2 / r2 + self.a3
    }

    pub fn derive(&self, ell: u32) -> Result<DerivedPseudoharmonic<T>> {
        let four = T::lit(4.0);
        let rhs = self.a2 / self.lambda + centrifugal::<T>(ell);
        let disc = T::one() + four * rhs;
        if disc < T::zero() {
            return Err(domain(format!(
                "a2 = {} too attractive for ℓ = {ell}: ν(ν+1) = {rhs} has no real root",
                self.a2
            )));
        }
        let mu = (self.a1 / self.lambda).sqrt();
        let nu = (disc.sqrt() - T::one()) / T::lit(2.0);
        Ok(DerivedPseudoharmonic { mu, nu, ell })
    }
}

impl<T: Real> MieParams<T> {
    pub fn new(a: T, b: T, c: T, lambda: T) -> Result<Self> {
        check_finite("a", a)?;
        check_finite("b", b)?;
        check_finite("c", c)?;
        check_lambda(lambda)?;
        Ok(Self { a, b, c, lambda })
    }

    /// Modified Kratzer `D (r - r0)² / r²`: `a = D r0²`, `b = -2 D r0`, `c = D`.
    pub fn modified_kratzer(depth: T, r0: T, lambda: T) -> Result<Self> {
        let two = T::lit(2.0);
        Self::new(depth * r0 * r0, -two * depth * r0, depth, lambda)
    }

    /// Kratzer `-D (2 r0 / r - r0² / r²)`: well depth `-D` at `r0`, zero at infinity.
    pub fn kratzer(depth: T, r0: T, lambda: T) -> Result<Self> {
        let m = Self::modified_kratzer(depth, r0, lambda)?;
        Ok(Self { c: T::zero(), ..m })
    }

    /// Coulomb `b / r` in natural units.
    pub fn coulomb(b: T) -> Result<Self> {
        Self::new(T::zero(), b, T::zero(), T::lit(0.5))
    }

    /// Modified Kratzer mapping of a molecule, the convention of the reference tables.
    pub fn from_molecule(mol: &MoleculeSpec, units: &UnitSystem<T>) -> Result<Self> {
        mol.validate()?;
        Self::modified_kratzer(mol.depth(units), mol.r0(), mol.lambda(units)?)
    }

    pub fn eval(&self, r: T) -> Result<T> {
        check_radius(r)?;
        Ok(self.value_unchecked(r))
    }

    #[inline]
    pub(crate) fn value_unchecked(&self, r: T) -> T {
        self.a / (r * r) + self.b / r + self.c
    }

    pub fn derive(&self, ell: u32) -> Result<DerivedMie<T>> {
        let gamma_sq = self.a / self.lambda + centrifugal::<T>(ell) + T::lit(0.25);
        if gamma_sq < T::zero() {
            return Err(domain(format!(
                "a = {} too attractive for ℓ = {ell}: γ² = {gamma_sq} < 0",
                self.a
            )));
        }
        Ok(DerivedMie {
            gamma: gamma_sq.sqrt(),
            delta_sq: self.b / self.lambda,
            ell,
        })
    }
}

impl<T: Real> RadialPotential<T> for PseudoharmonicParams<T> {
    fn value(&self, r: T) -> T {
        self.value_unchecked(r)
    }

    fn near_origin(&self) -> NearOrigin<T> {
        NearOrigin {
            inverse_square: self.a2,
            inverse: T::zero(),
            constant: self.a3,
        }
    }

    fn asymptote(&self) -> Option<T> {
        None
    }

    fn length_scale(&self) -> T {
        if self.a2 > T::zero() {
            (self.a2 / self.a1).sqrt().sqrt()
        } else {
            (self.lambda / self.a1).sqrt().sqrt()
        }
    }
}

impl<T: Real> RadialPotential<T> for MieParams<T> {
    fn value(&self, r: T) -> T {
        self.value_unchecked(r)
    }

    fn near_origin(&self) -> NearOrigin<T> {
        NearOrigin {
            inverse_square: self.a,
            inverse: self.b,
            constant: self.c,
        }
    }

    fn asymptote(&self) -> Option<T> {
        Some(self.c)
    }

    fn length_scale(&self) -> T {
        let two = T::lit(2.0);
        if self.a > T::zero() && self.b < T::zero() {
            // location of the minimum
            two * self.a / -self.b
        } else if self.b != T::zero() {
            self.lambda / self.b.abs()
        } else {
            T::one()
        }
    }
}

/// Wraps a closure as a potential that is regular at the origin.
pub struct FnPotential<T, F> {
    f: F,
    near_origin: NearOrigin<T>,
    asymptote: Option<T>,
    length_scale: T,
}

impl<T: Real, F: Fn(T) -> T + Sync> FnPotential<T, F> {
    pub fn new(f: F, length_scale: T) -> Self {
        let constant = f(T::zero());
        Self {
            f,
            near_origin: NearOrigin {
                inverse_square: T::zero(),
                inverse: T::zero(),
                constant,
            },
            asymptote: None,
            length_scale,
        }
    }

    pub fn with_near_origin(mut self, near_origin: NearOrigin<T>) -> Self {
        self.near_origin = near_origin;
        self
    }

    pub fn with_asymptote(mut self, v: T) -> Self {
        self.asymptote = Some(v);
        self
    }
}

impl<T: Real, F: Fn(T) -> T + Sync> RadialPotential<T> for FnPotential<T, F> {
    fn value(&self, r: T) -> T {
        (self.f)(r)
    }

    fn near_origin(&self) -> NearOrigin<T> {
        self.near_origin
    }

    fn asymptote(&self) -> Option<T> {
        self.asymptote
    }

    fn length_scale(&self) -> T {
        self.length_scale
    }
}
