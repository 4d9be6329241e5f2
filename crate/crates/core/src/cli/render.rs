use std::fmt::Write as _;

use crate::weight::Weight;

/// A plain string table, rendered as markdown or CSV.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: AsRef<str>>(headers: &[S]) -> Table {
        Table {
            headers: headers.iter().map(|h| h.as_ref().to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_markdown(&self) -> String {
        let cols = self.headers.len();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| width(h).max(3)).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(width(cell));
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &[String]| {
            out.push('|');
            for (cell, &w) in cells.iter().zip(&widths) {
                let escaped = cell.replace('|', "\\|");
                let pad = w.saturating_sub(width(cell));
                let _ = write!(out, " {escaped}{} |", " ".repeat(pad));
            }
            out.push('\n');
        };
        line(&mut out, &self.headers);
        out.push('|');
        for &w in widths.iter().take(cols) {
            let _ = write!(out, "{}|", "-".repeat(w + 2));
        }
        out.push('\n');
        for row in &self.rows {
            line(&mut out, row);
        }
        out
    }
}

fn width(s: &str) -> usize {
    s.chars().count()
}

/// CSV with a leading `type` column, one header line for all tables.
pub fn csv_document(tables: &[(String, &Table)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some((_, first)) = tables.first() {
        let mut header = vec!["type".to_string()];
        header.extend(first.headers.iter().cloned());
        w.write_record(&header).expect("in-memory write");
    }
    for (label, table) in tables {
        for row in &table.rows {
            let mut record = vec![label.clone()];
            record.extend(row.iter().cloned());
            w.write_record(&record).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// `[3,0];2x[2,2]`
pub fn components(list: &[(Weight, u64)], sep: &str) -> String {
    if list.is_empty() {
        return "-".to_string();
    }
    list.iter()
        .map(|(w, m)| if *m == 1 { w.to_string() } else { format!("{m}x{w}") })
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn joined<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markdown_is_padded() {
        let mut t = Table::new(&["i", "m"]);
        t.push(vec!["0".into(), "0".into()]);
        t.push(vec!["3".into(), "8/3".into()]);
        assert_eq!(
            t.to_markdown(),
            "| i   | m   |\n|-----|-----|\n| 0   | 0   |\n| 3   | 8/3 |\n"
        );
    }

    #[test]
    fn csv_quotes_weights() {
        let mut t = Table::new(&["components"]);
        t.push(vec![components(&[(Weight::from([0, 3]), 1), (Weight::from([2, 2]), 2)], ";")]);
        assert_eq!(
            csv_document(&[("A2".to_string(), &t)]),
            "type,components\nA2,\"[0,3];2x[2,2]\"\n"
        );
    }
}
