#![allow(dead_code)]

use e7tensor::{AlgebraId, DynkinWeight, Poly, RatFunc, Rational};
use num_bigint::BigInt;
use num_traits::One;

pub const DISPLAYS: &str = include_str!("../data/one_param_characters.txt");
pub const L3_L4: &str = include_str!("../data/e7_l3_l4_decomposition.txt");

#[derive(Debug, Clone)]
pub struct Display {
    pub name: String,
    pub kind: String,
    pub weight: DynkinWeight,
    pub scale: Rational,
    pub xpow: i64,
    /// `(power, value, known misprint)`
    pub coefs: Vec<(usize, BigInt, bool)>,
    pub factors: Vec<(u32, Vec<BigInt>)>,
    pub typo: bool,
}

/// `-a^b*c*...`
pub fn product(s: &str) -> BigInt {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let v = body.split('*').fold(BigInt::one(), |acc, f| match f.split_once('^') {
        Some((b, e)) => acc * num_traits::pow(b.parse::<BigInt>().unwrap(), e.parse().unwrap()),
        None => acc * f.parse::<BigInt>().unwrap(),
    });
    if neg {
        -v
    } else {
        v
    }
}

pub fn displays() -> Vec<Display> {
    let mut out = Vec::new();
    let mut cur: Option<Display> = None;
    for line in DISPLAYS.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        match key {
            "display" => {
                cur = Some(Display {
                    name: rest.to_string(),
                    kind: String::new(),
                    weight: DynkinWeight::zero(AlgebraId::E7),
                    scale: Rational::one(),
                    xpow: 0,
                    coefs: Vec::new(),
                    factors: Vec::new(),
                    typo: false,
                })
            }
            "end" => out.push(cur.take().unwrap()),
            _ => {
                let d = cur.as_mut().unwrap();
                match key {
                    "kind" => d.kind = rest.to_string(),
                    "algebra" => d.weight = DynkinWeight::zero(rest.parse().unwrap()),
                    "weight" => {
                        let labels = rest.split_whitespace().map(|t| t.parse().unwrap()).collect();
                        d.weight = DynkinWeight::new(d.weight.algebra(), labels).unwrap();
                    }
                    "status" => d.typo = rest == "typo",
                    "scale" => {
                        let (n, m) = rest.split_once(" / ").unwrap();
                        d.scale = Rational::new(product(n), product(m));
                    }
                    "xpow" => d.xpow = rest.parse().unwrap(),
                    "coef" => {
                        let t: Vec<&str> = rest.split_whitespace().collect();
                        d.coefs.push((t[0].parse().unwrap(), product(t[1]), t.get(2) == Some(&"typo")));
                    }
                    "factor" => {
                        let t: Vec<&str> = rest.split_whitespace().collect();
                        let c = t[1..].iter().map(|v| v.parse().unwrap()).collect();
                        d.factors.push((t[0].parse().unwrap(), c));
                    }
                    other => panic!("unknown key {other}"),
                }
            }
        }
    }
    out
}

impl Display {
    /// The printed polynomial part, without `scale * x^xpow`.
    pub fn polynomial(&self) -> Poly<Rational> {
        if !self.coefs.is_empty() {
            let top = self.coefs.iter().map(|c| c.0).max().unwrap();
            let mut v = vec![Rational::from_integer(0.into()); top + 1];
            for (k, c, _) in &self.coefs {
                v[*k] = Rational::from_integer(c.clone());
            }
            return Poly::new(v);
        }
        self.factors.iter().fold(Poly::one(), |acc, (m, c)| {
            let f = Poly::new(c.iter().map(|v| Rational::from_integer(v.clone())).collect());
            &acc * &f.pow(*m)
        })
    }

    pub fn value(&self) -> RatFunc {
        RatFunc::from_poly(self.polynomial()) * RatFunc::laurent_monomial(self.scale.clone(), self.xpow)
    }

    /// Computed value brought to the printed normalization.
    pub fn normalize(&self, computed: &RatFunc) -> RatFunc {
        computed.clone()
            * RatFunc::laurent_monomial(self.scale.recip(), -self.xpow)
    }
}

/// `(j, multiplicity, weight)` rows of the E7 `L3 x L4` table.
pub fn l3_l4_table() -> Vec<(usize, u64, DynkinWeight)> {
    L3_L4
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let t: Vec<i64> = l.split_whitespace().map(|v| v.parse().unwrap()).collect();
            (
                t[0] as usize,
                t[1] as u64,
                DynkinWeight::new(AlgebraId::E7, t[2..].to_vec()).unwrap(),
            )
        })
        .collect()
}
