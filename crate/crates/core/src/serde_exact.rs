//! Serde adapters that keep exact values exact on the wire.
//!
//! Unbounded integers are written as decimal strings and rationals as
//! `{"num": "...", "den": "..."}` so nothing passes through a float.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Nat;

pub mod nat {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Nat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Nat, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

pub mod opt_nat {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<Nat>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Nat>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(D::Error::custom))
            .transpose()
    }
}

pub mod nat_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[Nat], s: S) -> Result<S::Ok, S::Error> {
        let as_text: Vec<String> = values.iter().map(ToString::to_string).collect();
        as_text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Nat>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|t| t.parse().map_err(D::Error::custom))
            .collect()
    }
}

pub mod u64_str {
    use super::*;

    pub fn serialize<S: Serializer>(value: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

pub mod opt_u64_str {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<u64>, s: S) -> Result<S::Ok, S::Error> {
        value.map(|v| v.to_string()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u64>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(D::Error::custom))
            .transpose()
    }
}

pub mod u64_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[u64], s: S) -> Result<S::Ok, S::Error> {
        let as_text: Vec<String> = values.iter().map(ToString::to_string).collect();
        as_text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u64>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|t| t.parse().map_err(D::Error::custom))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

impl From<&BigRational> for RationalRepr {
    fn from(q: &BigRational) -> Self {
        RationalRepr {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl RationalRepr {
    fn into_rational<E: serde::de::Error>(self) -> Result<BigRational, E> {
        let num: BigInt = self.num.parse().map_err(E::custom)?;
        let den: BigInt = self.den.parse().map_err(E::custom)?;
        if den == BigInt::from(0) {
            return Err(E::custom("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        RationalRepr::from(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        RationalRepr::deserialize(d)?.into_rational()
    }
}

pub mod opt_rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        q.as_ref().map(RationalRepr::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        Option::<RationalRepr>::deserialize(d)?
            .map(RationalRepr::into_rational)
            .transpose()
    }
}

/// Render `q` as a decimal with `digits` places, truncated toward zero.
pub fn decimal(q: &BigRational, digits: usize) -> String {
    use num_traits::Signed;
    let neg = q.is_negative();
    let q = q.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (q.numer() * &scale) / q.denom();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
}
