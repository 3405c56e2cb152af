//! Catalog of all bouquets with `n` edges, one record per class.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::genuspoly::partial_dual_euler_polynomial_with;
use crate::intersection::{classify_one_term, interlace_sequences, signed_intersection_graph, InterlaceSequences, SignedGraph};
use crate::limits::Limits;
use crate::mutation::mutation_orbit;
use crate::poly::GenusPolynomial;
use crate::rotation::{canonical_form, Bouquet};
use crate::surface::is_orientable;
use crate::toolkit::enumerate::{all_bouquets_with, Dedup};

/// Orbit ids are computed up to this many edges and left `null` above it.
pub const ORBIT_ID_MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub orientable: bool,
    pub prime: bool,
    pub bipartite: bool,
    pub one_term: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub word: Bouquet,
    pub n: usize,
    pub polynomial: GenusPolynomial,
    pub si_graph: SignedGraph,
    pub sequences: InterlaceSequences,
    pub flags: Flags,
    /// Index of the first record in the same mutation orbit, up to relabeling.
    pub orbit_id: Option<usize>,
}

impl CensusRecord {
    pub fn from_word(word: Bouquet, limits: &Limits) -> Result<Self> {
        let polynomial = partial_dual_euler_polynomial_with(&word, limits)?;
        let si_graph = signed_intersection_graph(&word);
        let flags = Flags {
            orientable: is_orientable(&word),
            prime: !word.is_empty() && si_graph.is_connected(),
            bipartite: si_graph.is_bipartite(),
            one_term: classify_one_term(&si_graph).is_one_term,
        };
        Ok(CensusRecord {
            n: word.edge_count(),
            sequences: interlace_sequences(&word),
            word,
            polynomial,
            si_graph,
            flags,
            orbit_id: None,
        })
    }
}

/// Records for every class of bouquets with `n` edges up to relabeling,
/// sorted by canonical word.
pub fn census_records(n: usize, limits: &Limits) -> Result<Vec<CensusRecord>> {
    let words = all_bouquets_with(n, Dedup::Relabeled, limits)?;
    let mut records = words
        .into_par_iter()
        .map(|w| CensusRecord::from_word(w, limits))
        .collect::<Result<Vec<_>>>()?;
    if n <= ORBIT_ID_MAX_N {
        let index: HashMap<Bouquet, usize> = records
            .iter()
            .enumerate()
            .map(|(i, r)| (r.word.clone(), i))
            .collect();
        for i in 0..records.len() {
            if records[i].orbit_id.is_some() {
                continue;
            }
            let orbit = mutation_orbit(&records[i].word, limits.orbit_cap).map_err(|(e, _)| e)?;
            for state in orbit {
                let j = index[&canonical_form(&state, true)];
                records[j].orbit_id.get_or_insert(i);
            }
        }
    }
    Ok(records)
}

pub fn write_jsonl<W: Write>(records: &[CensusRecord], mut out: W) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_csv<W: Write>(records: &[CensusRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "word", "n", "polynomial", "orientable", "prime", "bipartite", "one_term", "orbit_id",
    ])
    .map_err(std::io::Error::from)?;
    for r in records {
        w.write_record([
            r.word.to_string(),
            r.n.to_string(),
            r.polynomial.to_string(),
            r.flags.orientable.to_string(),
            r.flags.prime.to_string(),
            r.flags.bipartite.to_string(),
            r.flags.one_term.to_string(),
            r.orbit_id.map(|o| o.to_string()).unwrap_or_default(),
        ])
        .map_err(std::io::Error::from)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes the JSON Lines catalog and returns the number of records.
pub fn census(n: usize, output: &Path, limits: &Limits) -> Result<usize> {
    let records = census_records(n, limits)?;
    write_jsonl(&records, BufWriter::new(File::create(output)?))?;
    Ok(records.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyKind;

    #[test]
    fn tiny_censuses() {
        let zero = census_records(0, &Limits::DEFAULT).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].polynomial, GenusPolynomial::one(PolyKind::Euler));
        assert_eq!(census_records(1, &Limits::DEFAULT).unwrap().len(), 2);
    }

    #[test]
    fn b3_record() {
        let records = census_records(3, &Limits::DEFAULT).unwrap();
        let b3: Bouquet = "(1, 2, 3, 1, 2, 3)".parse().unwrap();
        let r = records.iter().find(|r| r.word == b3).expect("B_3 present");
        assert_eq!(r.polynomial.to_string(), "8z^2");
        assert!(r.flags.one_term && r.flags.prime && r.flags.orientable && !r.flags.bipartite);
    }

    #[test]
    fn orbit_ids_point_at_orbit_leaders() {
        let records = census_records(4, &Limits::DEFAULT).unwrap();
        for (i, r) in records.iter().enumerate() {
            let leader = r.orbit_id.unwrap();
            assert!(leader <= i);
            assert_eq!(records[leader].orbit_id, Some(leader));
            assert_eq!(records[leader].polynomial, r.polynomial);
        }
    }

    #[test]
    fn jsonl_line_shape() {
        let records = census_records(1, &Limits::DEFAULT).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let first = text.lines().next().unwrap();
        let v: serde_json::Value = serde_json::from_str(first).unwrap();
        for field in ["word", "n", "polynomial", "si_graph", "sequences", "flags", "orbit_id"] {
            assert!(v.get(field).is_some(), "missing {field}");
        }
        let back: CensusRecord = serde_json::from_str(first).unwrap();
        assert_eq!(back, records[0]);
    }

    #[test]
    fn csv_quotes_words() {
        let records = census_records(1, &Limits::DEFAULT).unwrap();
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\"(1, -1)\",1,2z,false,true,true,true,"), "{text}");
    }
}
