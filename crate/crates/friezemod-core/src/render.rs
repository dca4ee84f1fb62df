//! Markdown, CSV and JSON views of the analysis results.
//!
//! The markdown layouts mirror the published tables (size table: rows `k`,
//! columns `N`; reducibility table: one row per prime). CSV column order is
//! fixed. Residues render as canonical representatives by default; the
//! `balanced` flag switches to representatives in `(-N/2, N/2]`, the mixed
//! style the published tables use.

use serde_json::{json, Value};

use crate::dynomial::DynomialRecord;
use crate::monomial::MonomialTable;
use crate::residue::Residue;
use crate::solution::{ReductionOutcome, ReductionWitness, SolutionVerdict, Verdict};
use crate::tuple::CTuple;

pub fn fmt_residue(r: Residue, balanced: bool) -> String {
    if balanced {
        r.balanced().to_string()
    } else {
        r.rep().to_string()
    }
}

pub fn fmt_tuple(t: &CTuple, balanced: bool) -> String {
    (0..t.len())
        .map(|i| fmt_residue(t.residue(i), balanced))
        .collect::<Vec<_>>()
        .join(",")
}

/// Tuple display abbreviated in the published style when long:
/// `a,b,c,...,y,z (length n)`.
pub fn fmt_tuple_abbrev(t: &CTuple, balanced: bool) -> String {
    let n = t.len();
    if n <= 13 {
        return format!("({})", fmt_tuple(t, balanced));
    }
    let part = |i: usize| fmt_residue(t.residue(i), balanced);
    format!(
        "({},{},{},...,{},{}) (length {})",
        part(0),
        part(1),
        part(2),
        part(n - 2),
        part(n - 1),
        n
    )
}

impl MonomialTable {
    /// Rows `k`, columns `N`, cells aligned; blank cells where `k > N - 1`.
    pub fn to_markdown(&self) -> String {
        let label_width = "k\\N".len().max(self.k_max.to_string().len());
        let widths: Vec<usize> = self
            .primes
            .iter()
            .enumerate()
            .map(|(i, p)| {
                self.rows
                    .iter()
                    .filter_map(|row| row[i].map(|s| s.to_string().len()))
                    .max()
                    .unwrap_or(0)
                    .max(p.to_string().len())
            })
            .collect();
        let mut out = String::new();
        out.push_str(&format!("| {:>label_width$} |", "k\\N"));
        for (p, w) in self.primes.iter().zip(&widths) {
            out.push_str(&format!(" {p:>w$} |"));
        }
        out.push('\n');
        out.push_str(&format!("| {:-^label_width$} |", ""));
        for w in &widths {
            out.push_str(&format!(" {:-^w$} |", ""));
        }
        out.push('\n');
        for (k, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("| {k:>label_width$} |"));
            for (cell, w) in row.iter().zip(&widths) {
                match cell {
                    Some(size) => out.push_str(&format!(" {size:>w$} |")),
                    None => out.push_str(&format!(" {:>w$} |", "")),
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push('k');
        for p in &self.primes {
            out.push_str(&format!(",{p}"));
        }
        out.push('\n');
        for (k, row) in self.rows.iter().enumerate() {
            out.push_str(&k.to_string());
            for cell in row {
                out.push(',');
                if let Some(size) = cell {
                    out.push_str(&size.to_string());
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "primes": self.primes,
            "k_max": self.k_max,
            "rows": self.rows.iter().enumerate().map(|(k, row)| {
                json!({ "k": k, "sizes": row })
            }).collect::<Vec<_>>(),
        })
    }
}

fn verdict_word(v: &Verdict) -> &'static str {
    match v.is_irreducible() {
        Some(true) => "irreducible",
        Some(false) => "reducible",
        None => "unknown",
    }
}

/// Markdown table mirroring the published reducibility layout.
pub fn two_dynomial_markdown(rows: &[DynomialRecord], balanced: bool) -> String {
    let mut out = String::from(
        "| N | size | reducibility | roots of X(X-2)=2 | reducing part |\n\
         | --- | --- | --- | --- | --- |\n",
    );
    for rec in rows {
        let roots = rec
            .quad_roots
            .iter()
            .map(|&r| fmt_residue(r, balanced))
            .collect::<Vec<_>>()
            .join(", ");
        let witness = match &rec.verdict {
            Verdict::Reducible {
                witness: Some(w), ..
            } => fmt_tuple_abbrev(&w.right, balanced),
            _ => String::new(),
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            rec.modulus,
            rec.size,
            verdict_word(&rec.verdict),
            roots,
            witness
        ));
    }
    out
}

/// CSV with fixed columns
/// `N,size,reducible,roots,witness_boundary,witness_length,source`;
/// roots are `;`-joined, witness columns empty on irreducible rows.
pub fn two_dynomial_csv(rows: &[DynomialRecord], balanced: bool) -> String {
    let mut out = String::from("N,size,reducible,roots,witness_boundary,witness_length,source\n");
    for rec in rows {
        let roots = rec
            .quad_roots
            .iter()
            .map(|&r| fmt_residue(r, balanced))
            .collect::<Vec<_>>()
            .join(";");
        let (wb, wl) = match &rec.verdict {
            Verdict::Reducible {
                witness: Some(w), ..
            } => (
                fmt_residue(w.right.residue(0), balanced),
                w.right.len().to_string(),
            ),
            _ => (String::new(), String::new()),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            rec.modulus,
            rec.size,
            verdict_word(&rec.verdict),
            roots,
            wb,
            wl,
            rec.verdict.source()
        ));
    }
    out
}

pub fn tuple_json(t: &CTuple) -> Value {
    Value::Array(t.reps().iter().map(|&r| json!(r)).collect())
}

pub fn witness_json(w: &ReductionWitness) -> Value {
    json!({
        "rotation": w.transform.rotation,
        "reflected": w.transform.reflected,
        "left": tuple_json(&w.left),
        "right": tuple_json(&w.right),
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    let witness = match v {
        Verdict::Reducible {
            witness: Some(w), ..
        } => witness_json(w),
        _ => Value::Null,
    };
    json!({
        "verdict": verdict_word(v),
        "source": v.source(),
        "witness": witness,
    })
}

pub fn dynomial_record_json(rec: &DynomialRecord) -> Value {
    json!({
        "n": rec.modulus.get(),
        "k": rec.k.rep(),
        "size": rec.size,
        "sign": rec.sign.value(),
        "ambiguous_sign": rec.ambiguous_sign,
        "criterion_applies": rec.criterion_applies,
        "roots": rec.quad_roots.iter().map(|r| json!(r.rep())).collect::<Vec<_>>(),
        "reducibility": verdict_json(&rec.verdict),
    })
}

pub fn two_dynomial_json(rows: &[DynomialRecord]) -> Value {
    Value::Array(rows.iter().map(dynomial_record_json).collect())
}

pub fn solution_verdict_json(v: &SolutionVerdict) -> Value {
    json!({
        "is_solution": v.is_solution,
        "sign": v.sign.map(|s| s.value()),
        "ambiguous": v.ambiguous,
    })
}

pub fn reduction_outcome_json(o: &ReductionOutcome) -> Value {
    match o {
        ReductionOutcome::Reducible(w) => json!({
            "verdict": "reducible",
            "witness": witness_json(w),
        }),
        ReductionOutcome::Irreducible => json!({ "verdict": "irreducible" }),
        ReductionOutcome::Unknown { work_spent } => json!({
            "verdict": "unknown",
            "work_spent": work_spent,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomial_size_table;
    use crate::residue::Modulus;

    #[test]
    fn monomial_csv_layout() {
        let table = monomial_size_table(&[11, 13], false).unwrap();
        let csv = table.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "k,11,13");
        assert_eq!(lines[1], "0,2,2");
        assert_eq!(lines[3], "2,11,13");
        // Row 6 exists only for 13.
        assert_eq!(lines[7], "6,6,7");
        assert_eq!(lines.len(), 8);
        let md = table.to_markdown();
        assert!(md.starts_with("| k\\N | 11 | 13 |"));
    }

    #[test]
    fn blank_cells_render_empty() {
        let table = monomial_size_table(&[3, 11], false).unwrap();
        let csv = table.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[4], "3,,5");
    }

    #[test]
    fn dynomial_csv_row() {
        let rows = crate::dynomial::two_dynomial_table(13).unwrap();
        let csv = two_dynomial_csv(&rows, false);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "N,size,reducible,roots,witness_boundary,witness_length,source"
        );
        assert_eq!(lines[1], "11,12,reducible,6;7,6,5,structured-search");
    }

    #[test]
    fn abbreviation() {
        let m = Modulus::new(97).unwrap();
        let t = crate::tuple::CTuple::alternating(m, 2, 28).unwrap();
        let s = fmt_tuple_abbrev(&t, true);
        assert_eq!(s, "(2,-2,2,...,2,-2) (length 28)");
        let short = crate::tuple::CTuple::new(m, [6, -2, 2, -2, 6]).unwrap();
        assert_eq!(fmt_tuple_abbrev(&short, true), "(6,-2,2,-2,6)");
    }
}
