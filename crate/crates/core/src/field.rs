//! Arithmetic over the small finite fields used by the incidence constructions:
//! the prime fields `Z_q` and `GF(4)`.
//!
//! `GF(4)` elements are encoded as `0, 1, 2 = α, 3 = α²` where `α² = α + 1`.
//! With that encoding addition is bitwise xor and multiplication is a fixed
//! table, so every operation is a table lookup.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("unsupported field order {0}: only primes and 4 are supported")]
    UnsupportedOrder(u32),
    #[error("element value {value} out of range for field of order {order}")]
    OutOfRange { value: u32, order: u32 },
    #[error("cannot combine elements of fields of order {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("cannot parse field element {text:?} for field of order {order}")]
    Parse { text: String, order: u32 },
}

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A supported finite field, identified by its order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    order: u32,
}

impl Field {
    pub fn new(order: u32) -> Result<Self, FieldError> {
        if order == 4 || is_prime(order) {
            Ok(Self { order })
        } else {
            Err(FieldError::UnsupportedOrder(order))
        }
    }

    pub fn order(self) -> u32 {
        self.order
    }

    pub fn is_prime_field(self) -> bool {
        self.order != 4
    }

    pub fn element(self, value: u32) -> Result<FieldElement, FieldError> {
        if value < self.order {
            Ok(FieldElement { value, order: self.order })
        } else {
            Err(FieldError::OutOfRange { value, order: self.order })
        }
    }

    pub fn zero(self) -> FieldElement {
        FieldElement { value: 0, order: self.order }
    }

    pub fn one(self) -> FieldElement {
        FieldElement { value: 1, order: self.order }
    }

    /// Elements in encoding order `0, 1, ..., q-1`.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> + Clone {
        let order = self.order;
        (0..order).map(move |value| FieldElement { value, order })
    }

    /// Parses the rendering produced by [`FieldElement`]'s `Display` impl.
    pub fn parse(self, text: &str) -> Result<FieldElement, FieldError> {
        let err = || FieldError::Parse { text: text.to_string(), order: self.order };
        let value = if self.order == 4 {
            match text {
                "0" => 0,
                "1" => 1,
                "a" => 2,
                "a2" => 3,
                _ => return Err(err()),
            }
        } else {
            if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            text.parse::<u32>().map_err(|_| err())?
        };
        self.element(value).map_err(|_| err())
    }
}

/// An element of a [`Field`]. Ordering compares the encoded value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u32,
    order: u32,
}

impl FieldElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn order(self) -> u32 {
        self.order
    }

    pub fn field(self) -> Field {
        Field { order: self.order }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Self) -> Result<(), FieldError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(FieldError::OrderMismatch(self.order, other.order))
        }
    }

    fn with(self, value: u32) -> Self {
        Self { value, order: self.order }
    }

    pub fn checked_add(self, other: Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(if self.order == 4 {
            self.with(self.value ^ other.value)
        } else {
            let sum = u64::from(self.value) + u64::from(other.value);
            self.with((sum % u64::from(self.order)) as u32)
        })
    }

    pub fn checked_mul(self, other: Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(if self.order == 4 {
            self.with(u32::from(GF4_MUL[self.value as usize][other.value as usize]))
        } else {
            let prod = u64::from(self.value) * u64::from(other.value);
            self.with((prod % u64::from(self.order)) as u32)
        })
    }

    pub fn checked_sub(self, other: Self) -> Result<Self, FieldError> {
        self.checked_add(other.neg())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        if self.order == 4 || self.value == 0 {
            self
        } else {
            self.with(self.order - self.value)
        }
    }

    pub fn inv(self) -> Result<Self, FieldError> {
        if self.value == 0 {
            return Err(FieldError::ZeroInverse);
        }
        if self.order == 4 {
            let value = (1..4).find(|&v| GF4_MUL[self.value as usize][v] == 1).expect("GF(4)* is a group");
            return Ok(self.with(value as u32));
        }
        // a^(q-2) = a^-1 in Z_q
        let modulus = u64::from(self.order);
        let mut base = u64::from(self.value);
        let mut exp = modulus - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % modulus;
            }
            base = base * base % modulus;
            exp >>= 1;
        }
        Ok(self.with(acc as u32))
    }
}

// Operator impls panic on mixed orders; generators only ever combine
// elements drawn from one field.
impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("field order mismatch")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("field order mismatch")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("field order mismatch")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        FieldElement::neg(self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 4 {
            f.write_str(["0", "1", "a", "a2"][self.value as usize])
        } else {
            write!(f, "{}", self.value)
        }
    }
}
