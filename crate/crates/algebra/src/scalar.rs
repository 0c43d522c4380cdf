// SPDX-License-Identifier: Apache-2.0

//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

/// A coefficient. Residues carry no modulus; arithmetic goes through [`Field`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, AlgebraError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    /// `"Q"` or `"F_p"` / `"Fp"` / `"GF(p)"`.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let digits = t.trim_start_matches(|c: char| !c.is_ascii_digit()).trim_end_matches(')');
        match digits.parse::<u64>() {
            Ok(p) if t.starts_with('F') || t.starts_with("GF") => Field::prime(p),
            _ => Err(AlgebraError::Data(format!("unknown field {text:?}"))),
        }
    }

    pub fn from_int(&self, k: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(k))),
            Field::Prime(p) => Scalar::Fp(k.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp(r) => *r == 0,
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => unreachable!("rational field has no modulus"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(((*x as u128 + *y as u128) % self.modulus() as u128) as u64),
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(((*x as u128 * *y as u128) % self.modulus() as u128) as u64),
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Q(x) => Scalar::Q(-x),
            Scalar::Fp(x) => Scalar::Fp((self.modulus() - x) % self.modulus()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        Some(match a {
            Scalar::Q(x) => Scalar::Q(x.recip()),
            Scalar::Fp(x) => {
                // Fermat: x^(p-2).
                let p = self.modulus() as u128;
                let (mut base, mut exp, mut acc) = (*x as u128, p - 2, 1u128);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Scalar::Fp(acc as u64)
            }
        })
    }

    /// `[num, den]` for rationals, the residue for `F_p`.
    pub fn to_json(&self, a: &Scalar) -> Vec<Value> {
        match a {
            Scalar::Q(x) => vec![json!(x.numer().to_string()), json!(x.denom().to_string())],
            Scalar::Fp(r) => vec![json!(r)],
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(x) if x.is_integer() => write!(f, "{}", x.numer()),
            Scalar::Q(x) => write!(f, "{}/{}", x.numer(), x.denom()),
            Scalar::Fp(r) => write!(f, "{r}"),
        }
    }
}

impl Scalar {
    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_one(),
            Scalar::Fp(r) => *r == 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(x) if x.is_negative())
    }
}
