//! The grading group `(Z2)^m`, its standard scalar product and the standard
//! ordering used to index matrix blocks.
//!
//! Coordinates are stored in a bit mask with the leftmost coordinate in the
//! most significant position, so lexicographic order on coordinate vectors is
//! the numeric order on masks.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_ARITY: usize = 16;

/// An element of `(Z2)^m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    bits: u32,
    arity: u8,
}

impl GroupElement {
    pub fn zero(arity: usize) -> Result<Self> {
        check_arity(arity)?;
        Ok(Self {
            bits: 0,
            arity: arity as u8,
        })
    }

    /// Builds an element from its coordinates `(c_1, ..., c_m)`.
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        check_arity(coords.len())?;
        let mut bits = 0u32;
        for &c in coords {
            if c > 1 {
                return Err(Error::Schema(format!("group coordinate {c} is not 0 or 1")));
            }
            bits = (bits << 1) | c as u32;
        }
        Ok(Self {
            bits,
            arity: coords.len() as u8,
        })
    }

    /// Builds an element from a mask whose bit `m-1` is the first coordinate.
    pub fn from_bits(bits: u32, arity: usize) -> Result<Self> {
        check_arity(arity)?;
        if arity < 32 && bits >> arity != 0 {
            return Err(Error::Schema(format!(
                "mask {bits:#b} has bits beyond arity {arity}"
            )));
        }
        Ok(Self {
            bits,
            arity: arity as u8,
        })
    }

    /// The unit vector with a 1 at coordinate `i` (zero based, from the left).
    pub fn unit(i: usize, arity: usize) -> Result<Self> {
        if i >= arity {
            return Err(Error::IndexOutOfRange(format!(
                "coordinate {i} for arity {arity}"
            )));
        }
        Self::from_bits(1 << (arity - 1 - i), arity)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn coords(&self) -> Vec<u8> {
        (0..self.arity())
            .map(|i| ((self.bits >> (self.arity() - 1 - i)) & 1) as u8)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        Ok(self.add(other))
    }

    /// Componentwise sum mod 2. Panics on arity mismatch; see [`Self::try_add`].
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "grading arity mismatch");
        Self {
            bits: self.bits ^ other.bits,
            arity: self.arity,
        }
    }

    pub fn try_scalar_product(&self, other: &Self) -> Result<u8> {
        self.same_arity(other)?;
        Ok(self.dot(other))
    }

    /// Standard scalar product `sum a_i b_i mod 2`.
    pub fn dot(&self, other: &Self) -> u8 {
        assert_eq!(self.arity, other.arity, "grading arity mismatch");
        ((self.bits & other.bits).count_ones() & 1) as u8
    }

    /// `<g, g>`: 0 for even elements, 1 for odd ones.
    pub fn parity(&self) -> u8 {
        (self.bits.count_ones() & 1) as u8
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 0
    }

    fn same_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }
}

/// `(-1)^{<a,b>}` as `+1` / `-1`.
pub fn sign(a: &GroupElement, b: &GroupElement) -> i8 {
    if a.dot(b) == 0 {
        1
    } else {
        -1
    }
}

pub fn scalar_product(a: &GroupElement, b: &GroupElement) -> Result<u8> {
    a.try_scalar_product(b)
}

fn check_arity(arity: usize) -> Result<()> {
    if arity == 0 || arity > MAX_ARITY {
        return Err(Error::UnsupportedArity(arity));
    }
    Ok(())
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<u8>::deserialize(d)?;
        GroupElement::from_coords(&coords).map_err(serde::de::Error::custom)
    }
}

/// All `2^m` elements of `(Z2)^m`: even elements first, then odd ones, each
/// class in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardOrder {
    arity: usize,
    elements: Vec<GroupElement>,
}

impl StandardOrder {
    pub fn new(arity: usize) -> Result<Self> {
        check_arity(arity)?;
        let all = (0u32..1 << arity).map(|b| GroupElement {
            bits: b,
            arity: arity as u8,
        });
        let (even, odd): (Vec<_>, Vec<_>) = all.partition(GroupElement::is_even);
        let mut elements = even;
        elements.extend(odd);
        Ok(Self { arity, elements })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn get(&self, index: usize) -> GroupElement {
        self.elements[index]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elements.iter().position(|e| e == g)
    }

    /// Indices of even elements and of odd elements.
    pub fn parity_split(&self) -> (Vec<usize>, Vec<usize>) {
        let half = self.len() / 2;
        ((0..half).collect(), (half..self.len()).collect())
    }
}

pub fn standard_order(arity: usize) -> Result<StandardOrder> {
    StandardOrder::new(arity)
}
