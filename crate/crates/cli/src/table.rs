use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Tsv,
    Json,
}

pub struct Cell {
    pub text: String,
    pub json: Value,
}

impl Cell {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Cell { text: text.into(), json }
    }

    pub fn text(s: impl Into<String>) -> Self {
        let s = s.into();
        Cell { json: Value::String(s.clone()), text: s }
    }

    pub fn int(n: impl Into<u64> + Copy) -> Self {
        let n: u64 = n.into();
        Cell { text: n.to_string(), json: Value::from(n) }
    }

    pub fn of<T: std::fmt::Display + serde::Serialize>(x: &T) -> Self {
        Cell { text: x.to_string(), json: serde_json::to_value(x).expect("serializable") }
    }
}

/// Rows keyed by column name, printed as an aligned table, TSV or a JSON
/// array of objects.
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table { headers, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| Value::Object(self.headers.iter().zip(r).map(|(h, c)| (h.to_string(), c.json.clone())).collect::<Map<_, _>>()))
                .collect(),
        )
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("json") + "\n",
            Format::Tsv => {
                let mut out = self.headers.join("\t") + "\n";
                for r in &self.rows {
                    out += &r.iter().map(|c| c.text.as_str()).collect::<Vec<_>>().join("\t");
                    out.push('\n');
                }
                out
            }
            Format::Table => {
                let widths: Vec<usize> = (0..self.headers.len())
                    .map(|i| self.rows.iter().map(|r| r[i].text.chars().count()).chain([self.headers[i].len()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let mut out = line(self.headers.clone());
                for r in &self.rows {
                    out += &line(r.iter().map(|c| c.text.as_str()).collect());
                }
                out
            }
        }
    }
}
