//! Builders for the group families behind the existence results.
//!
//! Every builder validates its parameters and returns an
//! [`ExtensionModel`]. Matrix groups over `F_p` are realized on points:
//! the Borel subgroup of `SL₂(F_p)` on the `p² − 1` nonzero vectors of
//! `F_p²`, and `PSL₂(F_p)` on the `p + 1` points of the projective line
//! (where `v` and `−v` coincide, so `±I` acts trivially).
//!
//! Where a family needs an element `c ∈ F_p^×` of order `k`, it is
//! `g^((p−1)/k)` for the smallest primitive root `g`.

use std::fmt;
use std::str::FromStr;

use crate::cluster::ExtensionModel;
use crate::error::{Error, Result};
use crate::permcore::{Caps, PermGroup, Permutation, SubgroupRel};

/// A family member with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `(Z/r)^s ⋊ Z/s` acting on the cosets of `{((a₁,…,a_{s−1},0),0)}`.
    SemidirectCluster { r: usize, s: usize },
    /// `S_n` with `H` the pointwise stabilizer of `{1..k}`.
    SnTuple { n: usize, k: usize },
    /// `S_n` with `H = A_k × A_{n−k}`.
    AltProduct { n: usize, k: usize },
    /// `D₄` on the square's vertices, `H` a vertex stabilizer.
    Dihedral4,
    /// `PSL₂(F_p)`, `H` the unipotent subgroup `C_p`.
    Psl2Max { p: usize },
    /// `PSL₂(F_p)`, `H` the image of `{[[c^l, b], [0, c^{−l}]]}`.
    Psl2BorelImage { p: usize, r: usize },
    /// `B₂(F_p) ≅ F_p ⋊ F_p^×`, `H = ⟨diag(c, c⁻¹)⟩`.
    BorelCase { p: usize, r: usize },
    /// Regular `Z/n`, `H` trivial.
    CyclicGalois { n: usize },
    /// `A_n × A_n` with `H = A_{n−1} × A_{n−1}`.
    AnSquare { n: usize },
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::SemidirectCluster { .. } => "semidirect",
            FamilySpec::SnTuple { .. } => "sn_tuple",
            FamilySpec::AltProduct { .. } => "alt_product",
            FamilySpec::Dihedral4 => "dihedral4",
            FamilySpec::Psl2Max { .. } => "psl2_max",
            FamilySpec::Psl2BorelImage { .. } => "psl2_borel_image",
            FamilySpec::BorelCase { .. } => "borel",
            FamilySpec::CyclicGalois { .. } => "cyclic",
            FamilySpec::AnSquare { .. } => "an_square",
        }
    }

    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            FamilySpec::SemidirectCluster { r, s } => vec![("r", r), ("s", s)],
            FamilySpec::SnTuple { n, k } | FamilySpec::AltProduct { n, k } => {
                vec![("n", n), ("k", k)]
            }
            FamilySpec::Dihedral4 => vec![],
            FamilySpec::Psl2Max { p } => vec![("p", p)],
            FamilySpec::Psl2BorelImage { p, r } | FamilySpec::BorelCase { p, r } => {
                vec![("p", p), ("r", r)]
            }
            FamilySpec::CyclicGalois { n } | FamilySpec::AnSquare { n } => vec![("n", n)],
        }
    }

    /// Parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::SemidirectCluster { r, s } => {
                if r < 2 || s < 2 {
                    return invalid(format!("semidirect needs r ≥ 2 and s ≥ 2, got r={r} s={s}"));
                }
            }
            FamilySpec::SnTuple { n, k } => {
                if n <= 2 || k < 1 || k + 2 > n {
                    return invalid(format!(
                        "sn_tuple needs n > 2 and 1 ≤ k ≤ n−2, got n={n} k={k}"
                    ));
                }
            }
            FamilySpec::AltProduct { n, k } => {
                if n <= 2 || k < 1 || k + 1 > n {
                    return invalid(format!(
                        "alt_product needs n > 2 and 1 ≤ k ≤ n−1, got n={n} k={k}"
                    ));
                }
            }
            FamilySpec::Dihedral4 => {}
            FamilySpec::Psl2Max { p } => {
                if p < 5 || !is_prime(p) {
                    return invalid(format!("psl2_max needs a prime p ≥ 5, got {p}"));
                }
            }
            FamilySpec::Psl2BorelImage { p, r } => {
                if p < 5 || !is_prime(p) {
                    return invalid(format!("psl2_borel_image needs a prime p ≥ 5, got {p}"));
                }
                if r < 3 || (p - 1) % (2 * r) != 0 {
                    return invalid(format!(
                        "psl2_borel_image needs r ≥ 3 and 2r | p−1, got p={p} r={r}"
                    ));
                }
            }
            FamilySpec::BorelCase { p, r } => {
                if p < 3 || !is_prime(p) {
                    return invalid(format!("borel needs an odd prime p, got {p}"));
                }
                if r < 1 || (p - 1) % r != 0 || p - 1 <= 2 * r {
                    return invalid(format!("borel needs r | p−1 and p−1 > 2r, got p={p} r={r}"));
                }
            }
            FamilySpec::CyclicGalois { n } => {
                if n < 2 {
                    return invalid(format!("cyclic needs n ≥ 2, got {n}"));
                }
            }
            FamilySpec::AnSquare { n } => {
                if n < 5 {
                    return invalid(format!("an_square needs n ≥ 5 (A_n simple), got {n}"));
                }
            }
        }
        Ok(())
    }

    pub fn build(&self, caps: &Caps) -> Result<ExtensionModel> {
        self.validate()?;
        let caps = *caps;
        match *self {
            FamilySpec::SemidirectCluster { r, s } => semidirect(r, s, caps),
            FamilySpec::SnTuple { n, k } => sn_tuple(n, k, caps),
            FamilySpec::AltProduct { n, k } => alt_product(n, k, caps),
            FamilySpec::Dihedral4 => dihedral4(caps),
            FamilySpec::Psl2Max { p } => psl2(p, None, caps),
            FamilySpec::Psl2BorelImage { p, r } => psl2(p, Some(r), caps),
            FamilySpec::BorelCase { p, r } => borel(p, r, caps),
            FamilySpec::CyclicGalois { n } => {
                let g = group(n, vec![perm_cycles(n, &[(1..=n).collect()])], caps)?;
                ExtensionModel::galois(g)
            }
            FamilySpec::AnSquare { n } => an_square(n, caps),
        }
    }

    /// Parses `name key=value ...`, e.g. `semidirect r=2 s=3`. A leading
    /// `family=` on the name is accepted.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let Some((first, rest)) = tokens.split_first() else {
            return Err(Error::Format("empty family spec".into()));
        };
        let first = first.as_ref();
        let name = first.strip_prefix("family=").unwrap_or(first);
        let mut kv: Vec<(String, usize)> = Vec::new();
        for tok in rest {
            let tok = tok.as_ref();
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Format(format!("expected key=value, got {tok:?}")))?;
            let v: usize = v
                .parse()
                .map_err(|_| Error::Format(format!("bad integer in {tok:?}")))?;
            kv.push((k.to_string(), v));
        }
        let get = |key: &str| -> Result<usize> {
            kv.iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::Format(format!("{name}: missing parameter {key}")))
        };
        let spec = match name {
            "semidirect" => FamilySpec::SemidirectCluster {
                r: get("r")?,
                s: get("s")?,
            },
            "sn_tuple" => FamilySpec::SnTuple {
                n: get("n")?,
                k: get("k")?,
            },
            "alt_product" => FamilySpec::AltProduct {
                n: get("n")?,
                k: get("k")?,
            },
            "dihedral4" => FamilySpec::Dihedral4,
            "psl2_max" => FamilySpec::Psl2Max { p: get("p")? },
            "psl2_borel_image" => FamilySpec::Psl2BorelImage {
                p: get("p")?,
                r: get("r")?,
            },
            "borel" => FamilySpec::BorelCase {
                p: get("p")?,
                r: get("r")?,
            },
            "cyclic" => FamilySpec::CyclicGalois { n: get("n")? },
            "an_square" => FamilySpec::AnSquare { n: get("n")? },
            other => return Err(Error::Format(format!("unknown family {other:?}"))),
        };
        let known: Vec<&str> = spec.params().iter().map(|(k, _)| *k).collect();
        if let Some((k, _)) = kv.iter().find(|(k, _)| !known.contains(&k.as_str())) {
            return Err(Error::Format(format!("{name}: unknown parameter {k}")));
        }
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for (k, v) in self.params() {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        Self::from_tokens(&tokens)
    }
}

pub fn build_semidirect(r: usize, s: usize) -> Result<ExtensionModel> {
    FamilySpec::SemidirectCluster { r, s }.build(&Caps::default())
}

pub fn build_sn_tuple(n: usize, k: usize) -> Result<ExtensionModel> {
    FamilySpec::SnTuple { n, k }.build(&Caps::default())
}

pub fn build_alt_product(n: usize, k: usize) -> Result<ExtensionModel> {
    FamilySpec::AltProduct { n, k }.build(&Caps::default())
}

pub fn build_dihedral4() -> Result<ExtensionModel> {
    FamilySpec::Dihedral4.build(&Caps::default())
}

pub fn build_psl2_max(p: usize) -> Result<ExtensionModel> {
    FamilySpec::Psl2Max { p }.build(&Caps::default())
}

pub fn build_psl2_borel_image(p: usize, r: usize) -> Result<ExtensionModel> {
    FamilySpec::Psl2BorelImage { p, r }.build(&Caps::default())
}

pub fn build_borel(p: usize, r: usize) -> Result<ExtensionModel> {
    FamilySpec::BorelCase { p, r }.build(&Caps::default())
}

pub fn build_cyclic_galois(n: usize) -> Result<ExtensionModel> {
    FamilySpec::CyclicGalois { n }.build(&Caps::default())
}

pub fn build_an_square(n: usize) -> Result<ExtensionModel> {
    FamilySpec::AnSquare { n }.build(&Caps::default())
}

fn group(degree: usize, gens: Vec<Permutation>, caps: Caps) -> Result<PermGroup> {
    PermGroup::from_generators_with_caps(degree, gens, caps)
}

fn perm_cycles(degree: usize, cycles: &[Vec<usize>]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("builder cycles are valid")
}

fn check_order(order: usize, caps: Caps, what: &'static str) -> Result<()> {
    if order > caps.elements {
        return Err(Error::CapExceeded {
            what,
            cap: caps.elements,
        });
    }
    Ok(())
}

/// Generators of `Sym(points)`.
fn sym_gens(degree: usize, points: &[usize]) -> Vec<Permutation> {
    match points.len() {
        0 | 1 => vec![],
        2 => vec![perm_cycles(degree, &[points.to_vec()])],
        _ => vec![
            perm_cycles(degree, &[points[..2].to_vec()]),
            perm_cycles(degree, &[points.to_vec()]),
        ],
    }
}

/// Generators of `Alt(points)`: 3-cycles `(a b x)`.
fn alt_gens(degree: usize, points: &[usize]) -> Vec<Permutation> {
    if points.len() < 3 {
        return vec![];
    }
    points[2..]
        .iter()
        .map(|&x| perm_cycles(degree, &[vec![points[0], points[1], x]]))
        .collect()
}

fn semidirect(r: usize, s: usize, caps: Caps) -> Result<ExtensionModel> {
    let size = (r as u64)
        .checked_pow(s as u32)
        .and_then(|x| x.checked_mul(s as u64))
        .filter(|&x| x <= caps.elements as u64)
        .ok_or(Error::CapExceeded {
            what: "semidirect product",
            cap: caps.elements,
        })? as usize;
    let rs = size / s;

    // element (a, b) ↦ b·r^s + Σ a_i r^i
    let decode = |x: usize| -> (Vec<usize>, usize) {
        let (mut v, b) = (x % rs, x / rs);
        let a = (0..s)
            .map(|_| {
                let d = v % r;
                v /= r;
                d
            })
            .collect();
        (a, b)
    };
    let encode =
        |a: &[usize], b: usize| -> usize { b * rs + a.iter().rev().fold(0, |acc, &d| acc * r + d) };
    // (a, b)(c, d) = (a + b·c, b + d) with (b·c)_i = c_{i+b}
    let mul = |x: usize, y: usize| -> usize {
        let ((a, b), (c, d)) = (decode(x), decode(y));
        let sum: Vec<usize> = (0..s).map(|i| (a[i] + c[(i + b) % s]) % r).collect();
        encode(&sum, (b + d) % s)
    };
    let left_regular = |x: usize| -> Permutation {
        Permutation::from_images_unchecked((0..size).map(|y| mul(x, y) as u32).collect())
    };
    let unit = |i: usize| -> usize {
        let mut a = vec![0; s];
        a[i] = 1;
        encode(&a, 0)
    };
    let g = group(
        size,
        vec![left_regular(unit(0)), left_regular(encode(&vec![0; s], 1))],
        caps,
    )?;
    let h = group(
        size,
        (0..s - 1).map(|i| left_regular(unit(i))).collect(),
        caps,
    )?;
    let action = SubgroupRel::new(g, h)?.coset_action()?;
    ExtensionModel::new(action.group().clone(), action.sub_image().clone())
}

fn sn_tuple(n: usize, k: usize, caps: Caps) -> Result<ExtensionModel> {
    let g = group(n, sym_gens(n, &(1..=n).collect::<Vec<_>>()), caps)?;
    let h = group(n, sym_gens(n, &(k + 1..=n).collect::<Vec<_>>()), caps)?;
    ExtensionModel::new(g, h)
}

fn alt_product(n: usize, k: usize, caps: Caps) -> Result<ExtensionModel> {
    let g = group(n, sym_gens(n, &(1..=n).collect::<Vec<_>>()), caps)?;
    let mut gens = alt_gens(n, &(1..=k).collect::<Vec<_>>());
    gens.extend(alt_gens(n, &(k + 1..=n).collect::<Vec<_>>()));
    let h = group(n, gens, caps)?;
    ExtensionModel::new(g, h)
}

fn dihedral4(caps: Caps) -> Result<ExtensionModel> {
    let g = group(
        4,
        vec![
            perm_cycles(4, &[vec![1, 2, 3, 4]]),
            perm_cycles(4, &[vec![1, 3]]),
        ],
        caps,
    )?;
    let h = g.point_stabilizer(1)?;
    ExtensionModel::new(g, h)
}

fn an_square(n: usize, caps: Caps) -> Result<ExtensionModel> {
    let a = (1..=n).collect::<Vec<_>>();
    let half = (n as u64 * (1..n as u64).product::<u64>() / 2) as usize;
    check_order(half.saturating_mul(half), caps, "A_n × A_n")?;
    let an = group(n, alt_gens(n, &a), caps)?;
    let an1 = group(n, alt_gens(n, &a[1..]), caps)?;
    ExtensionModel::new(an.direct_product(&an)?, an1.direct_product(&an1)?)
}

/// 2×2 matrix `[[a, b], [c, d]]` over `F_p`.
type Mat = [usize; 4];

fn projective_action(m: Mat, p: usize) -> Permutation {
    // x ∈ F_p ↦ point x+1 for [x:1], ∞ = [1:0] ↦ point p+1
    let point = |x: usize, y: usize| -> u32 {
        if y == 0 {
            p as u32
        } else {
            (x * mod_inv(y, p) % p) as u32
        }
    };
    let [a, b, c, d] = m;
    let images = (0..=p)
        .map(|i| {
            let (x, y) = if i == p { (1, 0) } else { (i, 1) };
            point((a * x + b * y) % p, (c * x + d * y) % p)
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

fn vector_action(m: Mat, p: usize) -> Permutation {
    // (x, y) ≠ 0 ↦ point x·p + y (0-based index x·p + y − 1)
    let [a, b, c, d] = m;
    let images = (1..p * p)
        .map(|v| {
            let (x, y) = (v / p, v % p);
            let (x2, y2) = ((a * x + b * y) % p, (c * x + d * y) % p);
            (x2 * p + y2 - 1) as u32
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

fn diag(c: usize, p: usize) -> Mat {
    [c, 0, 0, mod_inv(c, p)]
}

const UPPER: Mat = [1, 1, 0, 1];
const LOWER: Mat = [1, 0, 1, 1];

/// `PSL₂(F_p)` on `P¹(F_p)`; `H` is `C_p`, or the Borel image with `c` of
/// order `(p−1)/r` when `r` is given.
fn psl2(p: usize, r: Option<usize>, caps: Caps) -> Result<ExtensionModel> {
    check_order(p * (p * p - 1) / 2, caps, "PSL₂(F_p)")?;
    let g = group(
        p + 1,
        vec![projective_action(UPPER, p), projective_action(LOWER, p)],
        caps,
    )?;
    let mut hgens = vec![projective_action(UPPER, p)];
    if let Some(r) = r {
        let c = element_of_order((p - 1) / r, p);
        hgens.push(projective_action(diag(c, p), p));
    }
    let h = group(p + 1, hgens, caps)?;
    ExtensionModel::new(g, h)
}

/// `B₂(F_p)` on the nonzero vectors of `F_p²`, `H = ⟨diag(c, c⁻¹)⟩` with
/// `c` of order `(p−1)/r`.
fn borel(p: usize, r: usize, caps: Caps) -> Result<ExtensionModel> {
    check_order(p * (p - 1), caps, "B₂(F_p)")?;
    let g0 = primitive_root(p);
    let g = group(
        p * p - 1,
        vec![vector_action(diag(g0, p), p), vector_action(UPPER, p)],
        caps,
    )?;
    let c = element_of_order((p - 1) / r, p);
    let h = group(p * p - 1, vec![vector_action(diag(c, p), p)], caps)?;
    ExtensionModel::new(g, h)
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn mod_pow(mut base: usize, mut exp: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime.
pub fn mod_inv(x: usize, p: usize) -> usize {
    mod_pow(x, p - 2, p)
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of `F_p^×`.
pub fn primitive_root(p: usize) -> usize {
    if p == 2 {
        return 1;
    }
    let qs = prime_factors(p - 1);
    (2..p)
        .find(|&g| qs.iter().all(|&q| mod_pow(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// `g^((p−1)/k)` for the smallest primitive root `g`.
pub fn element_of_order(k: usize, p: usize) -> usize {
    mod_pow(primitive_root(p), (p - 1) / k, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_theory() {
        assert!(is_prime(13) && is_prime(2) && !is_prime(1) && !is_prime(91));
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
        assert_eq!(primitive_root(11), 2);
        assert_eq!(primitive_root(19), 2);
        assert_eq!(mod_pow(element_of_order(4, 13), 4, 13), 1);
        assert_eq!(mod_pow(element_of_order(4, 13), 2, 13), 12);
        assert_eq!(mod_inv(3, 7), 5);
    }

    #[test]
    fn family_spec_text() {
        let s: FamilySpec = "semidirect r=2 s=3".parse().unwrap();
        assert_eq!(s, FamilySpec::SemidirectCluster { r: 2, s: 3 });
        assert_eq!(s.to_string(), "semidirect r=2 s=3");
        let b = FamilySpec::from_tokens(&["family=borel", "p=7", "r=2"]).unwrap();
        assert_eq!(b, FamilySpec::BorelCase { p: 7, r: 2 });
        assert_eq!(
            "dihedral4".parse::<FamilySpec>().unwrap(),
            FamilySpec::Dihedral4
        );
        assert!("borel p=7".parse::<FamilySpec>().is_err());
        assert!("borel p=7 r=2 q=1".parse::<FamilySpec>().is_err());
        assert!("nonsense n=3".parse::<FamilySpec>().is_err());
        assert!("cyclic n=x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn parameter_violations() {
        let bad = [
            FamilySpec::SemidirectCluster { r: 1, s: 3 },
            FamilySpec::SnTuple { n: 4, k: 3 },
            FamilySpec::AltProduct { n: 3, k: 3 },
            FamilySpec::Psl2Max { p: 4 },
            FamilySpec::Psl2BorelImage { p: 13, r: 4 },
            FamilySpec::BorelCase { p: 7, r: 3 },
            FamilySpec::BorelCase { p: 9, r: 2 },
            FamilySpec::CyclicGalois { n: 1 },
            FamilySpec::AnSquare { n: 4 },
        ];
        for spec in bad {
            assert!(
                matches!(
                    spec.build(&Caps::default()),
                    Err(Error::InvalidParameter(_))
                ),
                "{spec}"
            );
        }
    }

    #[test]
    fn semidirect_cap() {
        let caps = Caps {
            elements: 100,
            lattice: 100,
        };
        let err = FamilySpec::SemidirectCluster { r: 4, s: 3 }
            .build(&caps)
            .unwrap_err();
        assert!(err.is_cap());
    }

    #[test]
    fn matrix_realizations_are_faithful() {
        let m = build_borel(7, 2).unwrap();
        assert_eq!(m.group().order().unwrap(), 42);
        let m = build_psl2_max(7).unwrap();
        assert_eq!(m.group().order().unwrap(), 168);
        assert_eq!(m.group().degree(), 8);
        let m = build_psl2_max(5).unwrap();
        assert_eq!(m.group().order().unwrap(), 60);
    }
}
