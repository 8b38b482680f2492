//! The 72 coset representatives of `W(A7)` in `W(E7)`.
//!
//! Each E7 Weyl orbit through a strictly dominant weight meets the strictly
//! dominant A7 chamber in exactly 72 points, one per coset. The embedded
//! table lists one word per coset; applying the words to a strictly
//! dominant E7 weight and embedding the results yields those 72 points.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::cartan::{
    e7_bourbaki_entries, embed_labels, AlgebraId, CartanMatrix, DynkinWeight,
};
use crate::error::{Error, Result};
use crate::weyl::{apply_indices, weyl_group_order, WeylWord};

const WORDS_TXT: &str = include_str!("../data/coset_words.txt");
const REFERENCE_TXT: &str = include_str!("../data/e7_orbit_reference.txt");

/// E7 weight whose A7 images make up the reference orbit.
pub const REFERENCE_WEIGHT: [i64; 7] = [1, 1, 2, 2, 1, 1, 1];

pub const COSET_COUNT: usize = 72;

/// SHA-256 of the two embedded data files.
pub const WORDS_SHA256: &str = "987d30fea26e907936d3c48f75f0815b1e8f21bf07dfab4585abf72cf34997a3";
pub const REFERENCE_SHA256: &str = "2e44a6479e331237297d654b2b19b2b88a456a04998d2eecea18f6d7ffd7adde";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetEntry {
    pub index: usize,
    pub sign: i64,
    pub word: WeylWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    entries: Vec<CosetEntry>,
    checksum: String,
}

fn sha256_hex(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    let mut out = String::with_capacity(64);
    for b in digest.iter() {
        let _ = write!(out, "{b:02x}");
    }
    out
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

impl CosetTable {
    /// Parses `s sign i1 ... ik` lines; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (line_no, line) in data_lines(text) {
            let bad = |what: &str| Error::TableParse(format!("line {line_no}: {what}"));
            let mut toks = line.split_whitespace();
            let index: usize = toks
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad("missing coset index"))?;
            let sign = match toks.next() {
                Some("+1") | Some("1") => 1,
                Some("-1") => -1,
                _ => return Err(bad("sign must be +1 or -1")),
            };
            let indices = toks
                .map(|t| t.parse::<usize>().map_err(|_| bad("non-integer reflection index")))
                .collect::<Result<Vec<_>>>()?;
            let word = WeylWord::new(AlgebraId::E7, indices)
                .map_err(|e| bad(&e.to_string()))?;
            if index != entries.len() + 1 {
                return Err(bad("coset indices must run 1, 2, 3, ..."));
            }
            entries.push(CosetEntry { index, sign, word });
        }
        Ok(CosetTable {
            entries,
            checksum: sha256_hex(text),
        })
    }

    pub fn entries(&self) -> &[CosetEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based.
    pub fn word(&self, s: usize) -> Option<&WeylWord> {
        self.entries.get(s.checked_sub(1)?).map(|e| &e.word)
    }

    /// SHA-256 of the source text.
    pub fn checksum(&self) -> &str {
        &self.checksum
    }

    fn images(&self, cartan: &CartanMatrix, w: &[i64]) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|e| {
                let mut l = w.to_vec();
                apply_indices(cartan, e.word.indices(), &mut l);
                embed_labels(&l)
            })
            .collect()
    }
}

pub fn coset_words() -> &'static CosetTable {
    static TABLE: OnceLock<CosetTable> = OnceLock::new();
    TABLE.get_or_init(|| CosetTable::parse(WORDS_TXT).expect("embedded coset table parses"))
}

pub fn embedded_table_text() -> &'static str {
    WORDS_TXT
}

pub fn reference_orbit_text() -> &'static str {
    REFERENCE_TXT
}

/// `(file, computed, pinned)` for each embedded data file.
pub fn data_checksums() -> Vec<(&'static str, String, &'static str)> {
    vec![
        ("coset_words.txt", sha256_hex(WORDS_TXT), WORDS_SHA256),
        ("e7_orbit_reference.txt", sha256_hex(REFERENCE_TXT), REFERENCE_SHA256),
    ]
}

/// The 72 A7 weights `nu_1 .. nu_72` of the reference orbit, in table order.
pub fn reference_orbit() -> &'static [Vec<i64>] {
    static NU: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    NU.get_or_init(|| parse_reference(REFERENCE_TXT).expect("embedded reference orbit parses"))
}

fn parse_reference(text: &str) -> Result<Vec<Vec<i64>>> {
    data_lines(text)
        .enumerate()
        .map(|(k, (line_no, line))| {
            let nums: Vec<i64> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::TableParse(format!("reference line {line_no}")))?;
            if nums.len() != 8 || nums[0] != k as i64 + 1 {
                return Err(Error::TableParse(format!("reference line {line_no}")));
            }
            Ok(nums[1..].to_vec())
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Every relabelling of the standard E7 diagram under which the embedded
/// words carry the reference weight onto the reference orbit, in order.
pub fn consistent_labelings(table: &CosetTable) -> Vec<CartanMatrix> {
    let base = e7_bourbaki_entries();
    let reference = reference_orbit();
    let mut found: Vec<CartanMatrix> = Vec::new();
    for perm in permutations(7) {
        let entries: Vec<Vec<i64>> = (0..7)
            .map(|i| (0..7).map(|j| base[perm[i]][perm[j]]).collect())
            .collect();
        if found.iter().any(|c| c.entries() == entries.as_slice()) {
            continue;
        }
        let cartan = CartanMatrix::from_entries(entries);
        let ok = table.len() == reference.len()
            && table.entries.iter().zip(reference).all(|(e, nu)| {
                let mut l = REFERENCE_WEIGHT.to_vec();
                apply_indices(&cartan, e.word.indices(), &mut l);
                embed_labels(&l) == *nu
            });
        if ok {
            found.push(cartan);
        }
    }
    found
}

/// The E7 Cartan matrix in the node order used throughout the crate.
pub fn infer_e7_labeling() -> Result<CartanMatrix> {
    let mut found = consistent_labelings(coset_words());
    match found.len() {
        0 => Err(Error::NoConsistentLabeling),
        1 => Ok(found.remove(0)),
        n => Err(Error::AmbiguousLabeling(n)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedA7Weight {
    pub weight: DynkinWeight,
    pub sign: i64,
    pub source_index: usize,
}

fn coset_sign(s: usize) -> i64 {
    if s <= COSET_COUNT / 2 {
        1
    } else {
        -1
    }
}

pub fn orbit_decompose(w: &DynkinWeight) -> Result<Vec<SignedA7Weight>> {
    orbit_decompose_with(coset_words(), w)
}

pub fn orbit_decompose_with(table: &CosetTable, w: &DynkinWeight) -> Result<Vec<SignedA7Weight>> {
    if !w.algebra().is_e7() {
        return Err(Error::WrongAlgebra {
            expected: "E7".into(),
            got: w.algebra(),
        });
    }
    w.ensure_strictly_dominant()?;
    let cartan = crate::cartan::cartan_matrix(AlgebraId::E7);
    Ok(table
        .images(cartan, w.labels())
        .into_iter()
        .zip(table.entries())
        .map(|(labels, e)| SignedA7Weight {
            weight: DynkinWeight::with_labels(AlgebraId::A7, labels),
            sign: coset_sign(e.index),
            source_index: e.index,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub probe: Vec<i64>,
    pub checksum: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Generic strictly dominant probe weight.
pub const PROBE_WEIGHT: [i64; 7] = [1, 2, 3, 4, 5, 6, 7];

pub fn validate_table() -> ValidationReport {
    validate_table_with(coset_words())
}

pub fn validate_table_with(table: &CosetTable) -> ValidationReport {
    let cartan = crate::cartan::cartan_matrix(AlgebraId::E7);
    let images = table.images(cartan, &PROBE_WEIGHT);
    let mut checks = Vec::new();
    let mut check = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    check(
        "word_count",
        table.len() == COSET_COUNT,
        format!("{} words", table.len()),
    );
    check(
        "identity_first",
        table.word(1).is_some_and(WeylWord::is_empty),
        "the first word is the identity".into(),
    );

    let mut seen = HashSet::new();
    let dups: Vec<usize> = images
        .iter()
        .zip(table.entries())
        .filter(|(img, _)| !seen.insert((*img).clone()))
        .map(|(_, e)| e.index)
        .collect();
    check("distinct_images", dups.is_empty(), format!("duplicates at {dups:?}"));

    let non_dominant: Vec<usize> = images
        .iter()
        .zip(table.entries())
        .filter(|(img, _)| img.iter().any(|&c| c < 1))
        .map(|(_, e)| e.index)
        .collect();
    check(
        "strictly_dominant_images",
        non_dominant.is_empty(),
        format!("not strictly dominant at {non_dominant:?}"),
    );

    let plus = table.entries().iter().filter(|e| e.sign == 1).count();
    let minus = table.len() - plus;
    let split_ok = plus == COSET_COUNT / 2
        && minus == COSET_COUNT / 2
        && table.entries().iter().all(|e| e.sign == coset_sign(e.index));
    check("sign_split", split_ok, format!("{plus} positive, {minus} negative"));

    let parity_bad: Vec<usize> = table
        .entries()
        .iter()
        .filter(|e| crate::weyl::word_sign(&e.word) != e.sign)
        .map(|e| e.index)
        .collect();
    check(
        "sign_matches_parity",
        parity_bad.is_empty(),
        format!("parity disagrees at {parity_bad:?}"),
    );

    let reference = reference_orbit();
    let top = table.images(cartan, &REFERENCE_WEIGHT);
    let off: Vec<usize> = top
        .iter()
        .zip(reference)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(k, _)| k + 1)
        .collect();
    check(
        "reference_orbit",
        off.is_empty() && top.len() == reference.len(),
        format!("mismatched positions {off:?}"),
    );

    let e7 = weyl_group_order(AlgebraId::E7);
    let a7 = weyl_group_order(AlgebraId::A7);
    check(
        "index_identity",
        e7 % a7 == 0 && e7 / a7 == table.len() as u64,
        format!("{e7} / {a7} against {} words", table.len()),
    );

    ValidationReport {
        probe: PROBE_WEIGHT.to_vec(),
        checksum: table.checksum().to_string(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::weyl_vector;

    #[test]
    fn embedded_words() {
        let t = coset_words();
        assert_eq!(t.len(), 72);
        assert!(t.word(1).unwrap().is_empty());
        assert_eq!(t.word(2).unwrap().indices(), &[3, 2]);
        assert_eq!(t.word(37).unwrap().indices(), &[3]);
        assert_eq!(
            t.word(72).unwrap().indices(),
            &[3, 2, 1, 4, 3, 2, 5, 4, 3, 6, 5, 4, 7]
        );
        for e in t.entries() {
            assert_eq!(e.word.len() % 2 == 0, e.index <= 36);
        }
    }

    #[test]
    fn labeling_is_unique() {
        let found = consistent_labelings(coset_words());
        assert_eq!(found.len(), 1);
        let c = &found[0];
        assert!(c.is_symmetric() && c.is_simply_laced());
        assert_eq!(c, crate::cartan::cartan_matrix(AlgebraId::E7));
    }

    #[test]
    fn rho_orbit() {
        let out = orbit_decompose(&weyl_vector(AlgebraId::E7)).unwrap();
        assert_eq!(out.len(), 72);
        assert_eq!(out[0].weight.labels(), &[1, 1, 7, 1, 1, 1, 1]);
        let distinct: HashSet<_> = out.iter().map(|s| s.weight.clone()).collect();
        assert_eq!(distinct.len(), 72);
        assert!(out.iter().all(|s| s.weight.is_strictly_dominant()));
        assert_eq!(out.iter().filter(|s| s.sign == 1).count(), 36);
    }

    #[test]
    fn rejects_non_strict() {
        assert!(matches!(
            orbit_decompose(&DynkinWeight::zero(AlgebraId::E7)),
            Err(Error::NotStrictlyDominant(_))
        ));
        assert!(orbit_decompose(&weyl_vector(AlgebraId::A7)).is_err());
    }

    #[test]
    fn validation_passes_and_detects_corruption() {
        let report = validate_table();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());

        let corrupted = WORDS_TXT.replacen("\n2 +1 3 2\n", "\n2 +1 2 3\n", 1);
        assert_ne!(corrupted, WORDS_TXT);
        let bad = validate_table_with(&CosetTable::parse(&corrupted).unwrap());
        assert!(!bad.passed());
        assert_ne!(bad.checksum, report.checksum);

        let duplicated = WORDS_TXT.replacen("\n2 +1 3 2\n", "\n2 +1 5 5\n", 1);
        let bad = validate_table_with(&CosetTable::parse(&duplicated).unwrap());
        assert!(bad.failures().any(|c| c.name == "distinct_images"));
    }

    #[test]
    fn pinned_checksums() {
        for (name, computed, pinned) in data_checksums() {
            assert_eq!(computed, pinned, "{name}");
        }
        assert_eq!(coset_words().checksum(), WORDS_SHA256);
    }

    #[test]
    fn parse_errors() {
        assert!(CosetTable::parse("1 +2\n").is_err());
        assert!(CosetTable::parse("1 +1 9\n").is_err());
        assert!(CosetTable::parse("2 +1\n").is_err());
        assert!(CosetTable::parse("1 +1 x\n").is_err());
    }
}
