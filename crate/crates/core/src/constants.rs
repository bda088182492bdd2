//! The pair of conjugate roots `a = φ`, `b = ψ` that every closed-form
//! expression is built from, and the identities relating them.

use num_traits::One;

use crate::report::{Check, Counterexample, Report};
use crate::ring::GoldenNumber;

/// The roots of `x² = x + 1` as used by the eigen-formulas.
///
/// Only [`GoldenConstants::default`] is mathematically meaningful. Other
/// values exist so verification paths can be exercised against a broken
/// constant and shown to fail.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoldenConstants {
    pub a: GoldenNumber,
    pub b: GoldenNumber,
}

impl Default for GoldenConstants {
    fn default() -> Self {
        GoldenConstants {
            a: GoldenNumber::phi(),
            b: GoldenNumber::psi(),
        }
    }
}

impl GoldenConstants {
    /// The closing identities `b = −1/a`, `1 + a = a²`, `−b/a = 1 + b`, plus
    /// `ab = −1`, `a + b = 1` and the conjugate/norm laws for `a`.
    pub fn identities(&self) -> Report {
        let (a, b) = (&self.a, &self.b);
        let one = GoldenNumber::one();
        let a_inv = a.inv();

        let mut checks = Vec::with_capacity(6);
        checks.push(match &a_inv {
            Ok(a_inv) => equality("b = -1/a", b, &(-a_inv)),
            Err(e) => Check::failed("b = -1/a", Counterexample::new("a", a, e)),
        });
        checks.push(equality("1 + a = a^2", &(&one + a), &(a * a)));
        checks.push(match &a_inv {
            Ok(a_inv) => equality("-b/a = 1 + b", &(-(b * a_inv)), &(&one + b)),
            Err(e) => Check::failed("-b/a = 1 + b", Counterexample::new("a", a, e)),
        });
        checks.push(equality("a*b = -1", &(a * b), &(-&one)));
        checks.push(equality("a + b = 1", &(a + b), &one));

        let name = "conj(a) = b, norm(a) = a*conj(a) = -1";
        let norm = GoldenNumber::from_rational(a.norm());
        let check = if &a.conj() != b {
            Check::failed(name, Counterexample::new("conj(a)", a.conj(), b))
        } else if norm != a * &a.conj() {
            Check::failed(name, Counterexample::new("norm(a)", &norm, a * &a.conj()))
        } else if norm != -&one {
            Check::failed(name, Counterexample::new("norm(a)", &norm, -&one))
        } else {
            Check::passed(name)
        };
        checks.push(check);
        Report::new(None, checks)
    }
}

fn equality(name: &str, left: &GoldenNumber, right: &GoldenNumber) -> Check {
    if left == right {
        Check::passed(name)
    } else {
        Check::failed(name, Counterexample::new(name, left, right))
    }
}
