//! Report rendering. JSON and CSV are for machines; text is aligned for
//! reading and carries no stability promise.

use centra_core::catalog::CatalogRow;
use centra_core::theorems::{reports_to_json, ConjectureReport};
use centra_core::{CentProfile, TheoremReport};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Csv,
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_records<I, R>(header: &[&str], records: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for record in records {
        w.write_record(record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let padded: Vec<String> = cells.zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        let mut s = padded.join("  ").trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(&mut header.iter().copied());
    for row in rows {
        out += &line(&mut row.iter().map(String::as_str));
    }
    out
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |n| n.to_string())
}

pub fn profiles(profiles: &[CentProfile], format: Format) -> String {
    const HEADER: [&str; 15] = [
        "group_spec",
        "order",
        "center_order",
        "n_cent",
        "n_2cent",
        "delta",
        "is_ca",
        "r",
        "derived_order",
        "solvable",
        "second_center_order",
        "quotient_n_cent",
        "quotient_n_2cent",
        "primitive_n",
        "primitive_2n",
    ];
    let cells = |p: &CentProfile| {
        vec![
            p.group_spec.clone(),
            p.order.to_string(),
            p.center_order.to_string(),
            p.n_cent.to_string(),
            p.n_2cent.to_string(),
            p.delta.to_string(),
            p.is_ca.to_string(),
            opt(p.r),
            p.derived_order.to_string(),
            p.solvable.to_string(),
            p.second_center_order.to_string(),
            p.quotient_n_cent.to_string(),
            opt(p.quotient_n_2cent),
            p.primitive_n.to_string(),
            p.primitive_2n.to_string(),
        ]
    };
    match format {
        Format::Json => json(profiles),
        Format::Csv => csv_records(&HEADER, profiles.iter().map(cells)),
        Format::Text => {
            let short = [
                "group",
                "|G|",
                "|Z|",
                "|Cent|",
                "|2-Cent|",
                "delta",
                "CA",
                "r",
                "|G'|",
                "solvable",
                "|Z2|",
                "|Cent(G/Z)|",
                "|2-Cent(G/Z)|",
                "prim_n",
                "prim_2n",
            ];
            table(&short, &profiles.iter().map(cells).collect::<Vec<_>>())
        }
    }
}

pub fn reports(reports: &[TheoremReport], format: Format) -> String {
    let header = ["theorem_id", "instances", "passed", "failed", "skipped"];
    let cells = |r: &TheoremReport| {
        vec![
            r.theorem_id.clone(),
            r.instances.to_string(),
            r.passed.to_string(),
            r.failed.to_string(),
            r.skipped.len().to_string(),
        ]
    };
    match format {
        Format::Json => reports_to_json(reports) + "\n",
        Format::Csv => csv_records(&header, reports.iter().map(cells)),
        Format::Text => {
            let mut out = table(&header, &reports.iter().map(cells).collect::<Vec<_>>());
            for r in reports {
                for c in &r.counterexamples {
                    out +=
                        &format!("FAIL {} on {}: expected {}, got {}\n", r.theorem_id, c.instance, c.expected, c.got);
                }
                for s in &r.skipped {
                    out += &format!("skip {} on {}: {}\n", r.theorem_id, s.instance, s.reason);
                }
            }
            out
        }
    }
}

pub fn theorem_list<'a>(items: impl Iterator<Item = (&'a str, &'a str)>, format: Format) -> String {
    #[derive(Serialize)]
    struct Item<'a> {
        id: &'a str,
        statement: &'a str,
    }
    let items: Vec<Item> = items.map(|(id, statement)| Item { id, statement }).collect();
    let cells = |i: &Item| vec![i.id.to_string(), i.statement.to_string()];
    match format {
        Format::Json => json(&items),
        Format::Csv => csv_records(&["id", "statement"], items.iter().map(cells)),
        Format::Text => table(&["id", "statement"], &items.iter().map(cells).collect::<Vec<_>>()),
    }
}

pub fn experiment(report: &ConjectureReport, format: Format) -> String {
    let header = ["name", "order", "n_2cent", "isomorphic_to"];
    let rows: Vec<Vec<String>> = report
        .simple_groups
        .iter()
        .map(|g| {
            vec![
                g.name.clone(),
                g.order.to_string(),
                g.n_2cent.to_string(),
                g.isomorphic_to.clone().unwrap_or_default(),
            ]
        })
        .collect();
    match format {
        Format::Json => json(report),
        Format::Csv => csv_records(&header, rows),
        Format::Text => {
            let mut out = table(&header, &rows);
            for (a, b) in &report.collisions {
                out += &format!("collision: {a} and {b} are not isomorphic but share |2-Cent|\n");
            }
            for s in &report.skipped {
                out += &format!("skip {}: {}\n", s.instance, s.reason);
            }
            out += &format!("pairwise distinct: {}\n", report.pairwise_distinct);
            out
        }
    }
}

pub fn catalog(rows: &[CatalogRow], format: Format) -> String {
    let header = ["name", "spec", "order", "note"];
    let cells = |r: &CatalogRow| vec![r.name.clone(), r.spec.clone(), opt(r.order), r.note.clone()];
    match format {
        Format::Json => json(rows),
        Format::Csv => csv_records(&header, rows.iter().map(cells)),
        Format::Text => table(&header, &rows.iter().map(cells).collect::<Vec<_>>()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_aligns_columns() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()], vec!["q".into(), "22".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\nq    22\n");
    }

    #[test]
    fn csv_quotes_commas() {
        let s = csv_records(&["spec"], [vec!["prod(C(2),C(3))".to_string()]]);
        assert_eq!(s, "spec\n\"prod(C(2),C(3))\"\n");
    }
}
