// Anchors for p <= 3, where the generic recipes do not apply.
//
// p = 0 is a single page. p = 1, 2, 3 are curated documents shipped with
// the crate; each is checked against a pinned SHA-256 before use and then
// verified like any generated decomposition.

use sha2::{Digest, Sha256};

use super::Decomposition;
use crate::error::{Error, Result};
use crate::io;
use crate::multipartite::{GraphFamily, Page, PartLayout};

/// A curated anchor document.
#[derive(Clone, Copy, Debug)]
pub struct CuratedCase {
    pub family: &'static str,
    pub n: u32,
    pub p: u32,
    pub sha256: &'static str,
    pub text: &'static str,
}

pub const CURATED: [CuratedCase; 6] = [
    CuratedCase {
        family: "k1nn",
        n: 6,
        p: 1,
        sha256: "01946893f12a2575310aa1ed876af5597f04a4be42cc10b56fd93ffec93a34f7",
        text: include_str!("../../data/k1nn_6.json"),
    },
    CuratedCase {
        family: "k1nn",
        n: 10,
        p: 2,
        sha256: "ef3cf890d97babd00d02ba7e8d3e638e8a45db40e2c9071bc3ce49f507525dc8",
        text: include_str!("../../data/k1nn_10.json"),
    },
    CuratedCase {
        family: "k1nn",
        n: 14,
        p: 3,
        sha256: "0bf8ff90bb26571a7e22c18dc0c385e0cccfb9f6544af44d98e3d653bc20ae1a",
        text: include_str!("../../data/k1nn_14.json"),
    },
    CuratedCase {
        family: "k2nn",
        n: 5,
        p: 1,
        sha256: "3129a06b0ba321fc6cb30428685be587152ba1f2877e25d7390c8ed4f6d73e2f",
        text: include_str!("../../data/k2nn_5.json"),
    },
    CuratedCase {
        family: "k2nn",
        n: 9,
        p: 2,
        sha256: "778ab44836ae264fa7dba84bce14f6b216549b35a0738c1424430912900c382e",
        text: include_str!("../../data/k2nn_9.json"),
    },
    CuratedCase {
        family: "k2nn",
        n: 13,
        p: 3,
        sha256: "f1ade6c9aa3c65405f0bb26e6f06c851fac6e61d12ae8bb8c2926c5365b5ac7e",
        text: include_str!("../../data/k2nn_13.json"),
    },
];

impl CuratedCase {
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.text.as_bytes()))
    }

    /// Parses the document after checking its digest.
    pub fn load(&self) -> Result<Decomposition> {
        let context = format!("curated {} n={}", self.family, self.n);
        let got = self.digest();
        if got != self.sha256 {
            return Err(Error::construction(
                context,
                format!("checksum {got} does not match {}", self.sha256),
            ));
        }
        let d =
            io::load(self.text).map_err(|e| Error::construction(context.clone(), e.to_string()))?;
        if d.family.name() != self.family || d.n != self.n {
            return Err(Error::construction(
                context,
                format!("document describes {} n={}", d.family, d.n),
            ));
        }
        Ok(d)
    }
}

/// The curated document for `family` at anchor parameter `p`, if any.
pub fn curated(family: &GraphFamily, p: u32) -> Option<&'static CuratedCase> {
    CURATED
        .iter()
        .find(|c| c.family == family.name() && c.p == p)
}

fn single_page(family: GraphFamily, n: u32) -> Result<Decomposition> {
    let part_sizes = family.part_sizes(n);
    let page = Page::from_edges(PartLayout::from_sizes(&part_sizes)?.edges())?;
    Ok(Decomposition {
        provenance: format!("{family} n={n} is planar: one page"),
        family,
        n,
        part_sizes,
        pages: vec![page],
    })
}

fn small_case(family: GraphFamily, p: u32, n0: u32) -> Result<Decomposition> {
    match p {
        0 => single_page(family, n0),
        1..=3 => curated(&family, p)
            .expect("curated table covers p = 1..=3")
            .load(),
        _ => Err(Error::invalid(format!("small cases cover p <= 3, got {p}"))),
    }
}

/// Unverified small anchor of `K_{1,4p+2,4p+2}` for `p <= 3`.
pub fn small_case_k1(p: u32) -> Result<Decomposition> {
    small_case(GraphFamily::K1nn, p, 2)
}

/// Unverified small anchor of `K_{2,4p+1,4p+1}` for `p <= 3`.
pub fn small_case_k2(p: u32) -> Result<Decomposition> {
    small_case(GraphFamily::K2nn, p, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digests_match() {
        for c in &CURATED {
            assert_eq!(c.digest(), c.sha256, "{} n={}", c.family, c.n);
        }
    }

    #[test]
    fn documents_are_canonical() {
        for c in &CURATED {
            assert_eq!(io::save(&c.load().unwrap()), c.text);
        }
    }

    #[test]
    fn tampered_text_is_rejected() {
        let mut c = CURATED[0];
        let altered = c.text.replacen("\"u1\"", "\"u2\"", 1);
        c.text = Box::leak(altered.into_boxed_str());
        assert!(matches!(c.load(), Err(Error::Construction { .. })));
    }

    #[test]
    fn lookup() {
        assert_eq!(curated(&GraphFamily::K2nn, 2).unwrap().n, 9);
        assert!(curated(&GraphFamily::K2nn, 4).is_none());
        assert!(curated(&GraphFamily::K11nn, 1).is_none());
        assert!(small_case_k1(4).is_err());
    }

    #[test]
    fn curated_pages_verify() {
        for c in &CURATED {
            let d = c.load().unwrap();
            let r = d.verify(Some(c.p as usize + 1)).unwrap();
            assert!(r.overall, "{} n={}: {:?}", c.family, c.n, r.problems());
        }
    }
}
