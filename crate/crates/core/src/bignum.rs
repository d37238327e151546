//! Serde glue for `BigUint`: a JSON number when it fits in 64 bits, a decimal
//! string otherwise. Both shapes are accepted on input.

use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Small(u64),
    Large(String),
}

impl From<&BigUint> for Repr {
    fn from(v: &BigUint) -> Self {
        match v.to_u64() {
            Some(x) => Repr::Small(x),
            None => Repr::Large(v.to_string()),
        }
    }
}

impl Repr {
    fn into_big<E: de::Error>(self) -> Result<BigUint, E> {
        match self {
            Repr::Small(x) => Ok(BigUint::from(x)),
            Repr::Large(s) => BigUint::from_str(&s).map_err(E::custom),
        }
    }
}

pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    Repr::from(v).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    Repr::deserialize(d)?.into_big()
}

pub mod list {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(Repr::from))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(Repr::into_big)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Wrap {
        #[serde(with = "super")]
        one: BigUint,
        #[serde(with = "super::list")]
        many: Vec<BigUint>,
    }

    #[test]
    fn small_values_are_numbers_large_are_strings() {
        let big = BigUint::from(u64::MAX) * 10u32;
        let w = Wrap {
            one: BigUint::from(7u32),
            many: vec![big.clone(), BigUint::from(2u32)],
        };
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(
            text,
            format!("{{\"one\":7,\"many\":[\"{big}\",2]}}")
        );
        assert_eq!(serde_json::from_str::<Wrap>(&text).unwrap(), w);
    }
}
