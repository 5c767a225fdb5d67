use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::Field;

const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo the prime `P`, stored in `[0, P)`.
///
/// Non-prime moduli are rejected at compile time.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64> {
    residue: u64,
}

impl<const P: u64> Fp<P> {
    const PRIME: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(n: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::PRIME;
        Fp { residue: n.rem_euclid(P as i64) as u64 }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub const fn modulus() -> u64 {
        P
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.residue as u128;
        let mut acc: u128 = 1;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp { residue: acc as u64 }
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn one() -> Self {
        Fp::new(1)
    }
    fn is_zero(&self) -> bool {
        self.residue == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp { residue: ((self.residue as u128 + other.residue as u128) % P as u128) as u64 }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        Fp { residue: ((self.residue as u128 * other.residue as u128) % P as u128) as u64 }
    }
    fn neg(&self) -> Self {
        Fp { residue: (P - self.residue) % P }
    }
    fn inv(&self) -> Option<Self> {
        if self.residue == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn from_integer(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        Fp::new(r.to_i64().expect("residue fits in i64"))
    }
    fn field_name() -> String {
        format!("F{P}")
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {P})", self.residue)
    }
}
