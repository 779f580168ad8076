//! Table and matrix serialization (JSON, CSV, Markdown) and matrix import.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constants::ConstantMatrix;
use crate::error::{Error, Result};
use crate::pairs::{ExtraspecialAssignment, SumDictionary};
use crate::quartets::{QuartetReport, QuartetTable};
use crate::rational;
use crate::report::VerificationReport;
use crate::root_data::RootSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            _ => Err(Error::Unsupported(format!("output format {s:?}"))),
        }
    }
}

fn coords_text(c: &[i64]) -> String {
    let parts: Vec<String> = c.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<()>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w)?;
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Debug, Serialize)]
struct RootRow {
    index: usize,
    coords: Vec<i64>,
    squared_length: String,
}

#[derive(Debug, Serialize)]
struct RootTable {
    diagram: String,
    rank: usize,
    roots: Vec<RootRow>,
}

fn root_rows(system: &RootSystem) -> Vec<RootRow> {
    system
        .roots()
        .iter()
        .enumerate()
        .map(|(i, r)| RootRow {
            index: i,
            coords: r.to_vec(),
            squared_length: rational::render(&system.squared_length(i)),
        })
        .collect()
}

/// Positive roots in regular order with their squared lengths.
pub fn roots(system: &RootSystem, format: Format) -> Result<String> {
    let rows = root_rows(system);
    match format {
        Format::Json => to_json(&RootTable {
            diagram: system.diagram().to_string(),
            rank: system.rank(),
            roots: rows,
        }),
        Format::Csv => csv_string(|w| {
            w.write_record(["index", "coords", "squared_length"])?;
            for r in &rows {
                w.write_record([
                    r.index.to_string(),
                    coords_text(&r.coords),
                    r.squared_length.clone(),
                ])?;
            }
            Ok(())
        }),
        Format::Md => {
            let mut s = format!(
                "Positive roots of {}\n\n| # | root | length^2 |\n|---:|:---|---:|\n",
                system.diagram()
            );
            for r in &rows {
                writeln!(
                    s,
                    "| {} | {} | {} |",
                    r.index,
                    coords_text(&r.coords),
                    r.squared_length
                )
                .unwrap();
            }
            Ok(s)
        }
    }
}

#[derive(Debug, Serialize)]
struct PairRow {
    sum: usize,
    sum_coords: Vec<i64>,
    extraspecial: [usize; 2],
    value: i64,
    phi: String,
    special: Vec<[usize; 2]>,
}

/// Every non-simple positive root with its special pairs; the first one is
/// extraspecial and carries its seeded constant.
pub fn pairs(system: &RootSystem, format: Format) -> Result<String> {
    let dict = SumDictionary::build(system);
    let seeds = ExtraspecialAssignment::build(system, &dict)?;
    let rows: Vec<PairRow> = dict
        .iter()
        .map(|(gamma, ps)| {
            let seed = seeds.seed(gamma).expect("seed for every key");
            PairRow {
                sum: gamma,
                sum_coords: system.root(gamma).to_vec(),
                extraspecial: [seed.pair.i, seed.pair.j],
                value: seed.value,
                phi: rational::render(&seed.phi),
                special: ps.iter().map(|p| [p.i, p.j]).collect(),
            }
        })
        .collect();
    let show = |ps: &[[usize; 2]]| -> String {
        ps.iter()
            .map(|[i, j]| format!("({i},{j})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    match format {
        Format::Json => to_json(&serde_json::json!({
            "diagram": system.diagram().to_string(),
            "rank": system.rank(),
            "extraspecial_count": rows.len(),
            "sums": rows,
        })),
        Format::Csv => csv_string(|w| {
            w.write_record([
                "sum",
                "sum_coords",
                "r1",
                "s1",
                "value",
                "phi",
                "special_pairs",
            ])?;
            for r in &rows {
                w.write_record([
                    r.sum.to_string(),
                    coords_text(&r.sum_coords),
                    r.extraspecial[0].to_string(),
                    r.extraspecial[1].to_string(),
                    r.value.to_string(),
                    r.phi.clone(),
                    show(&r.special),
                ])?;
            }
            Ok(())
        }),
        Format::Md => {
            let mut s = format!(
                "Special pairs of {} ({} extraspecial)\n\n| sum | root | (r1,s1) | N | phi | special pairs |\n|---:|:---|:---|---:|---:|:---|\n",
                system.diagram(),
                rows.len()
            );
            for r in &rows {
                writeln!(
                    s,
                    "| {} | {} | ({},{}) | {} | {} | {} |",
                    r.sum,
                    coords_text(&r.sum_coords),
                    r.extraspecial[0],
                    r.extraspecial[1],
                    r.value,
                    r.phi,
                    show(&r.special)
                )
                .unwrap();
            }
            Ok(s)
        }
    }
}

#[derive(Debug, Serialize)]
struct QuartetRow {
    ordinal: usize,
    r1: usize,
    r: usize,
    s: usize,
    s1: usize,
    coords: Option<[Vec<i64>; 4]>,
    mono: bool,
    simple: bool,
    s_minus_r1_is_root: bool,
    r_minus_r1_is_root: bool,
    phi: String,
}

/// Quartet table in table order (ordinals from 1) followed by its summary.
pub fn quartets(
    system: &RootSystem,
    table: &QuartetTable,
    summary: &QuartetReport,
    with_coords: bool,
    format: Format,
) -> Result<String> {
    let rows: Vec<QuartetRow> = table
        .rows
        .iter()
        .enumerate()
        .map(|(k, (q, c))| QuartetRow {
            ordinal: k + 1,
            r1: q.r1,
            r: q.r,
            s: q.s,
            s1: q.s1,
            coords: with_coords.then(|| q.as_tuple().map(|i| system.root(i).to_vec())),
            mono: c.mono,
            simple: c.simple,
            s_minus_r1_is_root: c.s_minus_r1_is_root,
            r_minus_r1_is_root: c.r_minus_r1_is_root,
            phi: rational::render(&c.phi),
        })
        .collect();
    match format {
        Format::Json => to_json(&serde_json::json!({
            "diagram": system.diagram().to_string(),
            "summary": summary,
            "quartets": rows,
        })),
        Format::Csv => csv_string(|w| {
            let mut header = vec!["ordinal", "r1", "r", "s", "s1"];
            if with_coords {
                header.extend(["r1_coords", "r_coords", "s_coords", "s1_coords"]);
            }
            header.extend([
                "mono",
                "simple",
                "s_minus_r1_is_root",
                "r_minus_r1_is_root",
                "phi",
            ]);
            w.write_record(&header)?;
            for r in &rows {
                let mut rec = vec![
                    r.ordinal.to_string(),
                    r.r1.to_string(),
                    r.r.to_string(),
                    r.s.to_string(),
                    r.s1.to_string(),
                ];
                if let Some(c) = &r.coords {
                    rec.extend(c.iter().map(|x| coords_text(x)));
                }
                rec.extend([
                    r.mono.to_string(),
                    r.simple.to_string(),
                    r.s_minus_r1_is_root.to_string(),
                    r.r_minus_r1_is_root.to_string(),
                    r.phi.clone(),
                ]);
                w.write_record(&rec)?;
            }
            Ok(())
        }),
        Format::Md => {
            let mark = |b: bool| if b { "yes" } else { "no" };
            let mut s = format!(
                "Quartets of {}\n\n| # | r1 | r | s | s1 |",
                system.diagram()
            );
            if with_coords {
                s.push_str(" roots |");
            }
            s.push_str(" mono | simple | s-r1 | r-r1 | phi |\n|---:|---:|---:|---:|---:|");
            if with_coords {
                s.push_str(":---|");
            }
            s.push_str(":---:|:---:|:---:|:---:|---:|\n");
            for r in &rows {
                write!(
                    s,
                    "| {} | {} | {} | {} | {} |",
                    r.ordinal, r.r1, r.r, r.s, r.s1
                )
                .unwrap();
                if let Some(c) = &r.coords {
                    let shown: Vec<String> = c.iter().map(|x| coords_text(x)).collect();
                    write!(s, " {} |", shown.join(" ")).unwrap();
                }
                writeln!(
                    s,
                    " {} | {} | {} | {} | {} |",
                    mark(r.mono),
                    mark(r.simple),
                    mark(r.s_minus_r1_is_root),
                    mark(r.r_minus_r1_is_root),
                    r.phi
                )
                .unwrap();
            }
            writeln!(s, "\n{}", summary_text(summary)).unwrap();
            Ok(s)
        }
    }
}

/// One-paragraph plain-text quartet summary.
pub fn summary_text(r: &QuartetReport) -> String {
    let hist = |h: &std::collections::BTreeMap<String, usize>| -> String {
        h.iter()
            .map(|(k, v)| format!("{k}: {v}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!(
        "{}: {} quartets, {} mono, {} simple; phi over quartets {{{}}}; phi over extraspecial pairs {{{}}}; non-simple ordinals {:?}",
        r.diagram,
        r.total,
        r.mono,
        r.simple,
        hist(&r.phi_quartets),
        hist(&r.phi_pairs),
        r.non_simple_ordinals
    )
}

/// Serialized constant matrix: only `i < j` nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixExport {
    pub diagram: String,
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub entries: Vec<(usize, usize, i64)>,
}

impl MatrixExport {
    pub fn new(system: &RootSystem, matrix: &ConstantMatrix) -> Self {
        MatrixExport {
            diagram: system.diagram().to_string(),
            rank: system.rank(),
            roots: system.roots().iter().map(|r| r.to_vec()).collect(),
            entries: matrix.upper_nonzero(),
        }
    }

    /// Checks the header against `system` and rebuilds the full matrix.
    pub fn into_matrix(self, system: &RootSystem) -> Result<ConstantMatrix> {
        if self.diagram != system.diagram().to_string() || self.rank != system.rank() {
            return Err(Error::Import(format!(
                "matrix is for {} (rank {}), expected {}",
                self.diagram,
                self.rank,
                system.diagram()
            )));
        }
        let expected: Vec<Vec<i64>> = system.roots().iter().map(|r| r.to_vec()).collect();
        if self.roots != expected {
            return Err(Error::Import(
                "root list differs from the regular ordering".into(),
            ));
        }
        ConstantMatrix::from_upper(system.len(), &self.entries)
    }
}

pub fn matrix(system: &RootSystem, matrix: &ConstantMatrix, format: Format) -> Result<String> {
    let export = MatrixExport::new(system, matrix);
    match format {
        Format::Json => to_json(&export),
        Format::Csv => csv_string(|w| {
            w.write_record(["i", "j", "n", "root_i", "root_j"])?;
            for &(i, j, v) in &export.entries {
                w.write_record([
                    i.to_string(),
                    j.to_string(),
                    v.to_string(),
                    coords_text(&export.roots[i]),
                    coords_text(&export.roots[j]),
                ])?;
            }
            Ok(())
        }),
        Format::Md => {
            let mut s = format!(
                "Structure constants of {} ({} nonzero entries with i < j)\n\n| i | j | root i | root j | N |\n|---:|---:|:---|:---|---:|\n",
                system.diagram(),
                export.entries.len()
            );
            for &(i, j, v) in &export.entries {
                writeln!(
                    s,
                    "| {i} | {j} | {} | {} | {v} |",
                    coords_text(&export.roots[i]),
                    coords_text(&export.roots[j])
                )
                .unwrap();
            }
            Ok(s)
        }
    }
}

fn parse_coords(text: &str) -> Result<Vec<i64>> {
    text.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| Error::Import(format!("bad coordinate {p:?}: {e}")))
        })
        .collect()
}

/// Reads a matrix written by [`matrix`] as JSON or CSV.
pub fn import_matrix(system: &RootSystem, text: &str, format: Format) -> Result<ConstantMatrix> {
    match format {
        Format::Json => serde_json::from_str::<MatrixExport>(text)?.into_matrix(system),
        Format::Csv => {
            let mut rdr = csv::Reader::from_reader(text.as_bytes());
            let mut entries = Vec::new();
            for rec in rdr.records() {
                let rec = rec?;
                if rec.len() != 5 {
                    return Err(Error::Import(format!(
                        "expected 5 columns, got {}",
                        rec.len()
                    )));
                }
                let num = |k: usize| -> Result<i64> {
                    rec[k]
                        .trim()
                        .parse()
                        .map_err(|e| Error::Import(format!("bad number {:?}: {e}", &rec[k])))
                };
                let (i, j, v) = (num(0)? as usize, num(1)? as usize, num(2)?);
                for (k, idx) in [(3, i), (4, j)] {
                    let c = parse_coords(&rec[k])?;
                    if idx >= system.len() || system.root(idx).coords() != c.as_slice() {
                        return Err(Error::Import(format!(
                            "root {idx} does not match {}",
                            &rec[k]
                        )));
                    }
                }
                entries.push((i, j, v));
            }
            ConstantMatrix::from_upper(system.len(), &entries)
        }
        Format::Md => Err(Error::Unsupported("markdown matrix import".into())),
    }
}

pub fn report(report: &VerificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => csv_string(|w| {
            w.write_record(["check", "population", "failures", "passed"])?;
            for c in &report.checks {
                w.write_record([
                    c.name.clone(),
                    c.population.to_string(),
                    c.failures.len().to_string(),
                    c.passed().to_string(),
                ])?;
            }
            Ok(())
        }),
        Format::Md => Ok(format!("```\n{report}\n```\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::compute_all_positive;
    use crate::root_data::Kind;

    #[test]
    fn matrix_round_trip() {
        let s = RootSystem::new(Kind::C, 3).unwrap();
        let m = compute_all_positive(&s).unwrap();
        for f in [Format::Json, Format::Csv] {
            let text = matrix(&s, &m, f).unwrap();
            assert_eq!(import_matrix(&s, &text, f).unwrap(), m);
        }
    }

    #[test]
    fn import_rejects_wrong_diagram() {
        let c3 = RootSystem::new(Kind::C, 3).unwrap();
        let b3 = RootSystem::new(Kind::B, 3).unwrap();
        let text = matrix(&c3, &compute_all_positive(&c3).unwrap(), Format::Json).unwrap();
        assert!(matches!(
            import_matrix(&b3, &text, Format::Json),
            Err(Error::Import(_))
        ));
    }

    #[test]
    fn root_table_rows() {
        let s = RootSystem::new(Kind::G, 2).unwrap();
        let md = roots(&s, Format::Md).unwrap();
        assert!(md.contains("| 0 | [1, 0] | 2/3 |"));
        let csv = roots(&s, Format::Csv).unwrap();
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.contains("5,\"[3, 2]\",2"));
    }

    #[test]
    fn format_parse() {
        assert_eq!("MD".parse::<Format>().unwrap(), Format::Md);
        assert!("xml".parse::<Format>().is_err());
    }
}
