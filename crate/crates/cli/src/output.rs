use std::io::Write;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::args::Format;

/// One table entry. Reals are written with 17 significant digits in CSV.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u128),
    Real(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format_real(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

/// Round-trip scientific notation; non-finite values never reach output.
pub fn format_real(v: f64) -> String {
    assert!(v.is_finite(), "non-finite value {v} reached the output layer");
    format!("{v:.16e}")
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Int(v) => s.serialize_u128(*v),
            Cell::Real(v) => {
                assert!(v.is_finite(), "non-finite value {v} reached the output layer");
                s.serialize_f64(*v)
            }
            Cell::Text(t) => s.serialize_str(t),
            Cell::Bool(b) => s.serialize_bool(*b),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub command: &'static str,
    pub header: &'static [&'static str],
    pub rows: Vec<Vec<Cell>>,
}

struct Row<'a>(&'a [&'static str], &'a [Cell]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0.iter().zip(self.1) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

struct Rows<'a>(&'a Table);

impl Serialize for Rows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.rows.len()))?;
        for r in &self.0.rows {
            seq.serialize_element(&Row(self.0.header, r))?;
        }
        seq.end()
    }
}

impl Serialize for Table {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("command", self.command)?;
        map.serialize_entry("columns", self.header)?;
        map.serialize_entry("rows", &Rows(self))?;
        map.end()
    }
}

impl Table {
    pub fn new(command: &'static str, header: &'static [&'static str]) -> Self {
        Table { command, header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write_csv(&self, w: &mut dyn Write) -> anyhow::Result<()> {
        let mut csv = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
        csv.write_record(self.header)?;
        for r in &self.rows {
            csv.write_record(r.iter().map(Cell::csv))?;
        }
        csv.flush()?;
        Ok(())
    }

    pub fn write(&self, format: Format, w: &mut dyn Write) -> anyhow::Result<()> {
        match format {
            Format::Csv => self.write_csv(w),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *w, self)?;
                writeln!(w)?;
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut t = Table::new("demo", &["a", "b", "c"]);
        t.push(vec![Cell::Int(3), Cell::Real(-1.0 / 3.0), Cell::text("RES")]);
        let mut buf = Vec::new();
        t.write(Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,b,c\n3,-3.3333333333333331e-1,RES\n");
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for v in [0.1, -1.794018912491950, 1e-300, 123456789.123456789, std::f64::consts::PI] {
            assert_eq!(format_real(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn json_rows_are_keyed_by_column() {
        let mut t = Table::new("demo", &["j", "m"]);
        t.push(vec![Cell::Int(2), Cell::Int(u128::from(u64::MAX) * 4)]);
        let text = serde_json::to_string(&t).unwrap();
        assert!(text.contains(r#""rows":[{"j":2,"m":73786976294838206460}]"#), "{text}");
        assert!(text.contains(r#""columns":["j","m"]"#));
    }
}
