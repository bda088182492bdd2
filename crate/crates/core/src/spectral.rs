//! Closed-form eigenstructure of the binomial matrix `R = (C(i−1, n−j))`.
//!
//! With `a = φ` and `b = ψ`:
//!
//! * eigenvalues `λ_j = (−1)^(n+j) a^(2j−n−1)`,
//! * eigenvectors `u_j` with entries
//!   `u_ij = Σ_{k=1}^{j} (−1)^(i−k) C(i−1, k−1) C(n−i, j−k) a^(2k−i−1)`,
//! * generating functions `U_i(z) = z (1+z)^(n−i) (az+b)^(i−1) = Σ_j u_ij z^j`.
//!
//! `R u_j = λ_j u_j` is established by showing that the row polynomial
//! `Σ_k R_ik U_k(z)` and the scaled substitution `(−1)^n a^(−n−1) U_i(−a²z)`
//! coincide, via two chains of intermediate forms. Every form is exposed here
//! as an exact polynomial so that each link can be checked.
//!
//! Closed forms are multiplied through by `z` so that all six row polynomials
//! share one alignment and extraction is always `[z^j]`.
//!
//! Indices `i`, `j` are 1-based throughout this module.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::binomial::{binom, BinomialMatrix};
use crate::constants::GoldenConstants;
use crate::error::{Error, Result};
use crate::matrix::{GoldenMatrix, GoldenVector, IntMatrix};
use crate::poly::GoldenPoly;
use crate::report::{Check, Counterexample, Report};
use crate::ring::GoldenNumber;

fn sign(exponent: usize) -> GoldenNumber {
    if exponent % 2 == 0 {
        GoldenNumber::one()
    } else {
        -GoldenNumber::one()
    }
}

/// `[1, p, p², …, p^count]` by successive multiplication.
fn successive_powers(p: &GoldenPoly, count: usize) -> Vec<GoldenPoly> {
    let mut powers = Vec::with_capacity(count + 1);
    powers.push(GoldenPoly::one());
    for k in 0..count {
        let next = &powers[k] * p;
        powers.push(next);
    }
    powers
}

fn exponent(e: usize) -> u32 {
    u32::try_from(e).expect("matrix order exceeds u32")
}

/// The binomial matrix of order `n` together with its closed-form eigen-data.
#[derive(Debug)]
pub struct Eigensystem {
    n: usize,
    consts: GoldenConstants,
    matrix: BinomialMatrix,
    gen_funs: OnceLock<Result<Vec<GoldenPoly>>>,
}

impl Eigensystem {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_constants(n, GoldenConstants::default())
    }

    pub fn with_constants(n: usize, consts: GoldenConstants) -> Result<Self> {
        Ok(Eigensystem {
            n,
            matrix: BinomialMatrix::new(n)?,
            consts,
            gen_funs: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn constants(&self) -> &GoldenConstants {
        &self.consts
    }

    pub fn matrix(&self) -> &BinomialMatrix {
        &self.matrix
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.n {
            Err(Error::IndexOutOfRange { index, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `λ_j = (−1)^(n+j) a^(2j−n−1)`
    pub fn eigenvalue(&self, j: usize) -> Result<GoldenNumber> {
        self.check_index(j)?;
        let power = self.consts.a.pow(2 * j as i64 - self.n as i64 - 1)?;
        Ok(sign(self.n + j) * power)
    }

    pub fn eigenvalues(&self) -> Result<Vec<GoldenNumber>> {
        (1..=self.n).map(|j| self.eigenvalue(j)).collect()
    }

    /// `u_ij`, evaluated term by term from the binomial sum.
    pub fn eigvec_entry(&self, i: usize, j: usize) -> Result<GoldenNumber> {
        self.check_index(i)?;
        self.check_index(j)?;
        let n = self.n;
        let mut sum = GoldenNumber::zero();
        for k in 1..=j {
            let c1 = binom((i - 1) as u64, k as i64 - 1);
            let c2 = binom((n - i) as u64, j as i64 - k as i64);
            let coeff = c1 * c2;
            if coeff.is_zero() {
                continue;
            }
            let power = self.consts.a.pow(2 * k as i64 - i as i64 - 1)?;
            let term = (sign(i + k) * power).scale(&coeff);
            sum += term;
        }
        Ok(sum)
    }

    /// `u_j = (u_1j, …, u_nj)`
    pub fn eigvec(&self, j: usize) -> Result<GoldenVector> {
        self.check_index(j)?;
        (1..=self.n)
            .map(|i| self.eigvec_entry(i, j))
            .collect::<Result<Vec<_>>>()
            .map(GoldenVector::new)
    }

    /// The matrix `U` whose column `j` is `u_j`.
    pub fn eigvec_matrix(&self) -> Result<GoldenMatrix> {
        let columns = (1..=self.n)
            .map(|j| self.eigvec(j))
            .collect::<Result<Vec<_>>>()?;
        GoldenMatrix::from_columns(&columns)
    }

    fn one_plus_z() -> GoldenPoly {
        GoldenPoly::linear(GoldenNumber::one(), GoldenNumber::one())
    }

    /// `az + b`
    fn root_linear(&self) -> GoldenPoly {
        GoldenPoly::linear(self.consts.b.clone(), self.consts.a.clone())
    }

    /// `U_i(z) = z (1+z)^(n−i) (az+b)^(i−1)`, expanded.
    pub fn gen_fun(&self, i: usize) -> Result<GoldenPoly> {
        self.check_index(i)?;
        let product = &Self::one_plus_z().pow(exponent(self.n - i))
            * &self.root_linear().pow(exponent(i - 1));
        Ok(&GoldenPoly::z() * &product)
    }

    fn gen_funs(&self) -> Result<&[GoldenPoly]> {
        self.gen_funs
            .get_or_init(|| (1..=self.n).map(|i| self.gen_fun(i)).collect())
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// `Σ_k R_ik U_k(z)`
    pub fn lhs_row_poly(&self, i: usize) -> Result<GoldenPoly> {
        self.check_index(i)?;
        let gen_funs = self.gen_funs()?;
        let mut acc = GoldenPoly::zero();
        for (k, u) in gen_funs.iter().enumerate() {
            let r = self.matrix.entry(i, k + 1)?;
            if !r.is_zero() {
                acc = &acc + &u.scalar_mul(&GoldenNumber::from(r));
            }
        }
        Ok(acc)
    }

    /// `z (az+b)^(n−i) Σ_{k=0}^{i−1} C(i−1, k) (1+z)^k (az+b)^(i−1−k)`
    pub fn lhs_intermediate_poly(&self, i: usize) -> Result<GoldenPoly> {
        self.check_index(i)?;
        let shifts = successive_powers(&Self::one_plus_z(), i - 1);
        let roots = successive_powers(&self.root_linear(), (i - 1).max(self.n - i));
        let mut sum = GoldenPoly::zero();
        for k in 0..i {
            let c = GoldenNumber::from(binom((i - 1) as u64, k as i64));
            sum = &sum + &(&shifts[k] * &roots[i - 1 - k]).scalar_mul(&c);
        }
        Ok(&GoldenPoly::z() * &(&roots[self.n - i] * &sum))
    }

    /// `z (az+b)^(n−i) ((1+b) + (1+a)z)^(i−1)`
    pub fn lhs_closed_poly(&self, i: usize) -> Result<GoldenPoly> {
        self.check_index(i)?;
        let one = GoldenNumber::one();
        let merged = GoldenPoly::linear(&one + &self.consts.b, &one + &self.consts.a);
        let product = &self.root_linear().pow(exponent(self.n - i)) * &merged.pow(exponent(i - 1));
        Ok(&GoldenPoly::z() * &product)
    }

    /// `(−1)^n a^(−n−1)`
    fn rhs_prefactor(&self) -> Result<GoldenNumber> {
        Ok(sign(self.n) * self.consts.a.pow(-(self.n as i64) - 1)?)
    }

    /// `(−1)^n a^(−n−1) U_i(−a²z)`
    pub fn rhs_scaled_poly(&self, i: usize) -> Result<GoldenPoly> {
        let u = self.gen_fun(i)?;
        let a = &self.consts.a;
        Ok(u.scale_arg(&-(a * a)).scalar_mul(&self.rhs_prefactor()?))
    }

    /// `(−1)^n a^(−n−1) (−a²z) (1 − a²z)^(n−i) (b − a³z)^(i−1)`
    pub fn rhs_substituted_poly(&self, i: usize) -> Result<GoldenPoly> {
        self.check_index(i)?;
        let a = &self.consts.a;
        let a2 = a * a;
        let a3 = &a2 * a;
        let lead = GoldenPoly::monomial(-&a2, 1);
        let first = GoldenPoly::linear(GoldenNumber::one(), -&a2).pow(exponent(self.n - i));
        let second = GoldenPoly::linear(self.consts.b.clone(), -a3).pow(exponent(i - 1));
        Ok((&(&lead * &first) * &second).scalar_mul(&self.rhs_prefactor()?))
    }

    /// `z (az − 1/a)^(n−i) (a²z − b/a)^(i−1)`
    pub fn rhs_closed_poly(&self, i: usize) -> Result<GoldenPoly> {
        self.check_index(i)?;
        let a = &self.consts.a;
        let a_inv = a.inv()?;
        let first = GoldenPoly::linear(-&a_inv, a.clone()).pow(exponent(self.n - i));
        let second =
            GoldenPoly::linear(-(&self.consts.b * &a_inv), a * a).pow(exponent(i - 1));
        Ok(&GoldenPoly::z() * &(&first * &second))
    }

    /// Compares `R·u_j` with `λ_j·u_j` entrywise.
    pub fn verify_eigenpair(&self, j: usize) -> Result<EigenpairCheck> {
        let u = self.eigvec(j)?;
        let lambda = self.eigenvalue(j)?;
        let left = GoldenMatrix::lift(self.matrix.as_int_matrix()).mul_vec(&u)?;
        let right = u.scale(&lambda);
        let mismatch = left.first_difference(&right).map(|index| EntryMismatch {
            index,
            left: left.as_slice()[index - 1].clone(),
            right: right.as_slice()[index - 1].clone(),
        });
        Ok(EigenpairCheck {
            n: self.n,
            j,
            mismatch,
        })
    }

    /// Checks every identity in the derivation for this order: the
    /// generating-function coefficients, both chains of row polynomials, and
    /// the eigenpair equations themselves.
    pub fn verify(&self) -> Report {
        let checks = vec![
            self.check_coefficients(),
            self.check_chain(
                "lhs_chain",
                &[
                    ("row", Self::lhs_row_poly),
                    ("intermediate", Self::lhs_intermediate_poly),
                    ("lhs_closed", Self::lhs_closed_poly),
                ],
            ),
            self.check_chain(
                "rhs_chain",
                &[
                    ("row", Self::lhs_row_poly),
                    ("scaled", Self::rhs_scaled_poly),
                    ("substituted", Self::rhs_substituted_poly),
                    ("rhs_closed", Self::rhs_closed_poly),
                ],
            ),
            self.check_eigenpairs(),
        ];
        Report::new(Some(self.n), checks)
    }

    fn check_coefficients(&self) -> Check {
        const NAME: &str = "coefficient_identity";
        let outcome = (|| -> Result<Option<Counterexample>> {
            for i in 1..=self.n {
                let u = self.gen_fun(i)?;
                if u.degree().is_some_and(|d| d > self.n) {
                    return Ok(Some(Counterexample::new(
                        format!("i={i}: degree"),
                        &u,
                        format!("degree <= {}", self.n),
                    )));
                }
                if !u.coeff(0).is_zero() {
                    return Ok(Some(Counterexample::new(
                        format!("i={i}, j=0"),
                        u.coeff(0),
                        0,
                    )));
                }
                for j in 1..=self.n {
                    let entry = self.eigvec_entry(i, j)?;
                    if u.coeff(j) != entry {
                        return Ok(Some(Counterexample::new(
                            format!("i={i}, j={j}"),
                            u.coeff(j),
                            entry,
                        )));
                    }
                }
            }
            Ok(None)
        })();
        into_check(NAME, outcome)
    }

    fn check_chain(&self, name: &str, forms: &[(&str, PolyForm)]) -> Check {
        let outcome = (|| -> Result<Option<Counterexample>> {
            for i in 1..=self.n {
                let (first_name, first_form) = forms[0];
                let reference = first_form(self, i)?;
                for &(form_name, form) in &forms[1..] {
                    let p = form(self, i)?;
                    if p != reference {
                        return Ok(Some(Counterexample::new(
                            format!("i={i}: {first_name} vs {form_name}"),
                            &reference,
                            &p,
                        )));
                    }
                }
            }
            Ok(None)
        })();
        into_check(name, outcome)
    }

    fn check_eigenpairs(&self) -> Check {
        let outcome = (|| -> Result<Option<Counterexample>> {
            for j in 1..=self.n {
                if let Some(cx) = self.verify_eigenpair(j)?.counterexample() {
                    return Ok(Some(cx));
                }
            }
            Ok(None)
        })();
        into_check("eigenpairs", outcome)
    }

    /// `trace(R) = Σ λ_j` and `det(R) = Π λ_j = ±1`.
    pub fn trace_det_identities(&self) -> Report {
        let eigenvalues = match self.eigenvalues() {
            Ok(v) => v,
            Err(e) => {
                let cx = || Counterexample::new("eigenvalues", &e, "");
                return Report::new(
                    Some(self.n),
                    vec![Check::failed("trace", cx()), Check::failed("determinant", cx())],
                );
            }
        };
        let r = self.matrix.as_int_matrix();

        let trace = r.trace();
        let sum: GoldenNumber = eigenvalues.iter().cloned().sum();
        let trace_check = match sum.to_integer() {
            Some(s) if s == trace => Check::passed("trace"),
            _ => Check::failed("trace", Counterexample::new("trace(R) vs sum", &trace, &sum)),
        };

        let det = GoldenMatrix::lift(r).det();
        let product: GoldenNumber = eigenvalues.iter().cloned().product();
        let unit = product
            .to_integer()
            .is_some_and(|p| p == BigInt::one() || p == -BigInt::one());
        let det_check = if det == product && unit {
            Check::passed("determinant")
        } else {
            Check::failed(
                "determinant",
                Counterexample::new("det(R) vs product", &det, &product),
            )
        };
        Report::new(Some(self.n), vec![trace_check, det_check])
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        Ok(Spectrum {
            n: self.n,
            eigenvalues: self.eigenvalues()?,
            eigenvector_matrix: self.eigvec_matrix()?,
        })
    }

    /// Assembles `(U, λ, U⁻¹)` and checks `U·U⁻¹ = I` and
    /// `U·diag(λ)·U⁻¹ = R` exactly before returning.
    pub fn decompose(&self) -> Result<SpectralDecomposition> {
        let eigvals = self.eigenvalues()?;
        for (p, x) in eigvals.iter().enumerate() {
            if let Some(q) = eigvals[p + 1..].iter().position(|y| x == y) {
                return Err(Error::RepeatedEigenvalue {
                    first: p + 1,
                    second: p + q + 2,
                });
            }
        }
        let eigvec_matrix = self.eigvec_matrix()?;
        let eigvec_inverse = eigvec_matrix.invert()?;
        let decomposition = SpectralDecomposition {
            n: self.n,
            eigvec_matrix,
            eigvals,
            eigvec_inverse,
        };
        let identity = &decomposition.eigvec_matrix * &decomposition.eigvec_inverse;
        if identity != GoldenMatrix::identity(self.n) {
            return Err(Error::SingularMatrix);
        }
        let recomposed = decomposition.recompose();
        let r = GoldenMatrix::lift(self.matrix.as_int_matrix());
        if let Some((row, col)) = first_matrix_difference(&recomposed, &r) {
            return Err(Error::Recomposition { row, col });
        }
        Ok(decomposition)
    }

    /// `R^m` through the decomposition, cross-checked against `m` direct
    /// multiplications of `R`.
    pub fn power(&self, m: u32) -> Result<IntMatrix> {
        let spectral = self.decompose()?.power(m)?;
        let direct = self.matrix.as_int_matrix().pow_by_repeated_mul(m);
        for r in 0..self.n {
            for c in 0..self.n {
                if spectral.get(r, c) != direct.get(r, c) {
                    return Err(Error::PowerMismatch {
                        power: m,
                        row: r + 1,
                        col: c + 1,
                        spectral: spectral.get(r, c).clone(),
                        direct: direct.get(r, c).clone(),
                    });
                }
            }
        }
        Ok(spectral)
    }
}

type PolyForm = fn(&Eigensystem, usize) -> Result<GoldenPoly>;

fn into_check(name: &str, outcome: Result<Option<Counterexample>>) -> Check {
    match outcome {
        Ok(cx) => Check::from_outcome(name, cx),
        Err(e) => Check::failed(name, Counterexample::new("evaluation", e, "")),
    }
}

/// 1-based position of the first differing entry.
fn first_matrix_difference(a: &GoldenMatrix, b: &GoldenMatrix) -> Option<(usize, usize)> {
    let n = a.order();
    (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .find(|&(r, c)| a.get(r, c) != b.get(r, c))
        .map(|(r, c)| (r + 1, c + 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMismatch {
    /// 1-based row of the first differing entry.
    pub index: usize,
    /// Entry of `R·u_j`.
    pub left: GoldenNumber,
    /// Entry of `λ_j·u_j`.
    pub right: GoldenNumber,
}

/// Outcome of comparing `R·u_j` with `λ_j·u_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenpairCheck {
    pub n: usize,
    pub j: usize,
    pub mismatch: Option<EntryMismatch>,
}

impl EigenpairCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn counterexample(&self) -> Option<Counterexample> {
        self.mismatch.as_ref().map(|m| {
            Counterexample::new(
                format!("j={}, i={}: (R·u_j)_i vs (λ_j·u_j)_i", self.j, m.index),
                &m.left,
                &m.right,
            )
        })
    }
}

/// Eigenvalues and eigenvector matrix (rows of `U`) for one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub n: usize,
    pub eigenvalues: Vec<GoldenNumber>,
    pub eigenvector_matrix: GoldenMatrix,
}

/// `R = U·diag(λ)·U⁻¹` with column `j` of `U` equal to `u_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralDecomposition {
    n: usize,
    eigvec_matrix: GoldenMatrix,
    eigvals: Vec<GoldenNumber>,
    eigvec_inverse: GoldenMatrix,
}

impl SpectralDecomposition {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn eigvec_matrix(&self) -> &GoldenMatrix {
        &self.eigvec_matrix
    }

    pub fn eigvals(&self) -> &[GoldenNumber] {
        &self.eigvals
    }

    pub fn eigvec_inverse(&self) -> &GoldenMatrix {
        &self.eigvec_inverse
    }

    /// `U·diag(λ)·U⁻¹`
    pub fn recompose(&self) -> GoldenMatrix {
        &self.eigvec_matrix.mul_diagonal(&self.eigvals) * &self.eigvec_inverse
    }

    /// `U·diag(λ^m)·U⁻¹` over Q(√5), before any integrality check.
    pub fn power_matrix(&self, m: u32) -> GoldenMatrix {
        let powers: Vec<GoldenNumber> = self
            .eigvals
            .iter()
            .map(|l| l.pow(i64::from(m)).expect("nonnegative exponent"))
            .collect();
        &self.eigvec_matrix.mul_diagonal(&powers) * &self.eigvec_inverse
    }

    /// `R^m` as an integer matrix.
    pub fn power(&self, m: u32) -> Result<IntMatrix> {
        let exact = self.power_matrix(m);
        exact.to_int_matrix().map_err(|(r, c)| Error::NonIntegral {
            power: m,
            row: r + 1,
            col: c + 1,
            value: Box::new(exact.get(r, c).clone()),
        })
    }
}

pub fn build_r(n: usize) -> Result<BinomialMatrix> {
    BinomialMatrix::new(n)
}

pub fn eigenvalue(n: usize, j: usize) -> Result<GoldenNumber> {
    Eigensystem::new(n)?.eigenvalue(j)
}

pub fn eigvec_entry(n: usize, i: usize, j: usize) -> Result<GoldenNumber> {
    Eigensystem::new(n)?.eigvec_entry(i, j)
}

pub fn eigvec(n: usize, j: usize) -> Result<GoldenVector> {
    Eigensystem::new(n)?.eigvec(j)
}

pub fn build_u(n: usize) -> Result<GoldenMatrix> {
    Eigensystem::new(n)?.eigvec_matrix()
}

pub fn gen_fun(n: usize, i: usize) -> Result<GoldenPoly> {
    Eigensystem::new(n)?.gen_fun(i)
}

pub fn lhs_row_poly(n: usize, i: usize) -> Result<GoldenPoly> {
    Eigensystem::new(n)?.lhs_row_poly(i)
}

pub fn lhs_intermediate_poly(n: usize, i: usize) -> Result<GoldenPoly> {
    Eigensystem::new(n)?.lhs_intermediate_poly(i)
}

pub fn lhs_closed_poly(n: usize, i: usize) -> Result<GoldenPoly> {
    Eigensystem::new(n)?.lhs_closed_poly(i)
}

pub fn rhs_scaled_poly(n: usize, i: usize) -> Result<GoldenPoly> {
    Eigensystem::new(n)?.rhs_scaled_poly(i)
}

pub fn rhs_substituted_poly(n: usize, i: usize) -> Result<GoldenPoly> {
    Eigensystem::new(n)?.rhs_substituted_poly(i)
}

pub fn rhs_closed_poly(n: usize, i: usize) -> Result<GoldenPoly> {
    Eigensystem::new(n)?.rhs_closed_poly(i)
}

pub fn verify_eigenpair(n: usize, j: usize) -> Result<EigenpairCheck> {
    Eigensystem::new(n)?.verify_eigenpair(j)
}

pub fn verify_note(n: usize) -> Result<Report> {
    Ok(Eigensystem::new(n)?.verify())
}

pub fn trace_det_identities(n: usize) -> Result<Report> {
    Ok(Eigensystem::new(n)?.trace_det_identities())
}

pub fn spectral_decompose(n: usize) -> Result<SpectralDecomposition> {
    Eigensystem::new(n)?.decompose()
}

/// `R^m` through the decomposition, cross-checked against `m` direct
/// multiplications of `R`.
pub fn matrix_power(n: usize, m: u32) -> Result<IntMatrix> {
    Eigensystem::new(n)?.power(m)
}
