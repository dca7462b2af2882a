use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sums::Sign;

/// Bounds of a parameter sweep. Each claim documents which dimension each
/// field drives; fields a claim does not use are ignored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub m_min: u64,
    pub m_max: u64,
    pub n_min: u64,
    pub n_max: u64,
    pub r_max: u32,
    pub s_max: u32,
    pub a_max: u32,
    /// Restrict to one sign; both when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
}

impl Grid {
    pub const fn new(m: (u64, u64), n: (u64, u64), r_max: u32, s_max: u32, a_max: u32) -> Self {
        Self {
            m_min: m.0,
            m_max: m.1,
            n_min: n.0,
            n_max: n.1,
            r_max,
            s_max,
            a_max,
            sign: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::invalid(format!(
                "need 1 <= n_min <= n_max, got {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.m_min == 0 || self.m_min > self.m_max {
            return Err(Error::invalid(format!(
                "need 1 <= m_min <= m_max, got {}..={}",
                self.m_min, self.m_max
            )));
        }
        Ok(())
    }

    pub fn ns(&self) -> impl Iterator<Item = u64> {
        self.n_min..=self.n_max
    }

    pub fn ms(&self) -> impl Iterator<Item = u64> {
        self.m_min..=self.m_max
    }

    pub fn signs(&self) -> Vec<Sign> {
        match self.sign {
            Some(s) => vec![s],
            None => Sign::BOTH.to_vec(),
        }
    }
}

/// Every tuple in `[lo, hi]^len`, in lexicographic order.
pub fn tuples(lo: u64, hi: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if lo > hi {
        return out;
    }
    let mut cur = vec![lo; len];
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi {
                cur[i] += 1;
                cur[i + 1..].iter_mut().for_each(|c| *c = lo);
                break;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(u64),
    List(Vec<u64>),
    Text(&'static str),
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<Vec<u64>> for ParamValue {
    fn from(v: Vec<u64>) -> Self {
        ParamValue::List(v)
    }
}

impl From<Sign> for ParamValue {
    fn from(s: Sign) -> Self {
        ParamValue::Text(match s {
            Sign::Plus => "plus",
            Sign::Alternating => "alternating",
        })
    }
}

impl From<&'static str> for ParamValue {
    fn from(s: &'static str) -> Self {
        ParamValue::Text(s)
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::List(v) => {
                let parts: Vec<String> = v.iter().map(u64::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

/// Named parameters of one grid point, kept in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(Vec<(&'static str, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &'static str, value: impl Into<ParamValue>) -> Self {
        self.0.push((name, value.into()));
        self
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }

    /// Integer parameter; panics if missing, since points and evaluators are
    /// written together.
    pub fn int(&self, name: &str) -> u64 {
        match self.get(name) {
            Some(ParamValue::Int(v)) => *v,
            other => panic!("parameter {name} is not an integer: {other:?}"),
        }
    }

    pub fn exp(&self, name: &str) -> u32 {
        u32::try_from(self.int(name)).expect("exponent fits in u32")
    }

    pub fn list(&self, name: &str) -> &[u64] {
        match self.get(name) {
            Some(ParamValue::List(v)) => v,
            other => panic!("parameter {name} is not a list: {other:?}"),
        }
    }

    pub fn sign(&self) -> Sign {
        match self.get("sign") {
            Some(ParamValue::Text("alternating")) => Sign::Alternating,
            Some(ParamValue::Text("plus")) => Sign::Plus,
            other => panic!("missing sign parameter: {other:?}"),
        }
    }

    pub fn text(&self, name: &str) -> &'static str {
        match self.get(name) {
            Some(ParamValue::Text(s)) => s,
            other => panic!("parameter {name} is not text: {other:?}"),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &(&'static str, ParamValue)> {
        self.0.iter()
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_lexicographic() {
        assert_eq!(
            tuples(1, 2, 2),
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(tuples(1, 3, 3).len(), 27);
        assert_eq!(tuples(1, 1, 1), vec![vec![1]]);
        assert!(tuples(2, 1, 2).is_empty());
    }

    #[test]
    fn params_keep_order() {
        let p = Params::new()
            .with("ns", vec![1, 2])
            .with("r", 3u32)
            .with("sign", Sign::Alternating);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"ns":[1,2],"r":3,"sign":"alternating"}"#
        );
        assert_eq!(p.to_string(), "ns=(1,2) r=3 sign=alternating");
        assert_eq!(p.sign(), Sign::Alternating);
        assert_eq!(p.exp("r"), 3);
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::new((1, 3), (1, 6), 2, 0, 0).validate().is_ok());
        assert!(Grid::new((1, 3), (0, 6), 2, 0, 0).validate().is_err());
        assert!(Grid::new((4, 3), (1, 6), 2, 0, 0).validate().is_err());
    }
}
