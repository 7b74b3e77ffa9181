use std::fmt;

use serde::{Deserialize, Serialize};

/// Named integer parameters shared by families, polynomials and triples.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub e: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("missing parameter `{0}`")]
pub struct ParamError(pub &'static str);

impl Params {
    pub fn n(n: i64) -> Self {
        Params { n: Some(n), ..Default::default() }
    }

    pub fn nk(n: i64, k: i64) -> Self {
        Params { n: Some(n), k: Some(k), ..Default::default() }
    }

    pub fn with_k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_s(mut self, s: i64) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_e(mut self, e: i64) -> Self {
        self.e = Some(e);
        self
    }

    pub fn with_l(mut self, l: i64) -> Self {
        self.l = Some(l);
        self
    }

    pub fn with_r(mut self, r: i64) -> Self {
        self.r = Some(r);
        self
    }

    pub fn get(&self, name: &'static str) -> Result<i64, ParamError> {
        let v = match name {
            "n" => self.n,
            "k" => self.k,
            "s" => self.s,
            "e" => self.e,
            "l" => self.l,
            "r" => self.r,
            _ => None,
        };
        v.ok_or(ParamError(name))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, v) in [
            ("n", self.n),
            ("k", self.k),
            ("s", self.s),
            ("e", self.e),
            ("l", self.l),
            ("r", self.r),
        ] {
            if let Some(v) = v {
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "{name}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}
