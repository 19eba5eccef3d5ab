use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    #[value(name = "md")]
    Markdown,
}

/// Rows of preformatted cells.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Markdown => self.markdown(),
        }
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    fn markdown(&self) -> String {
        let cols = self.header.len();
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count().max(3)).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = (0..cols)
                .map(|i| {
                    let cell = cells.get(i).map(String::as_str).unwrap_or("");
                    format!("{cell:>width$}", width = widths[i])
                })
                .collect();
            format!("| {} |\n", padded.join(" | "))
        };
        let mut out = line(&self.header);
        let rule: Vec<String> = widths.iter().map(|&w| format!("{}:", "-".repeat(w - 1))).collect();
        out.push_str(&format!("| {} |\n", rule.join(" | ")));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }
}

fn csv_field(f: &str) -> String {
    if f.contains([',', '"', '\n']) {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

/// Computed value: 5 decimals in markdown, 17 significant digits in CSV.
pub fn value(v: f64, format: Format) -> String {
    match format {
        Format::Csv => format!("{v:.16e}"),
        Format::Markdown => format!("{v:.5}"),
    }
}

/// Input value, printed in its shortest round-trip form.
pub fn input(v: f64) -> String {
    format!("{v}")
}

pub const ERR: &str = "ERR";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips() {
        for v in [85.997_474_561_234_57, -1e-300, 0.1 + 0.2, std::f64::consts::PI] {
            assert_eq!(value(v, Format::Csv).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn markdown_alignment() {
        let mut t = Table::new(["k", "delta"]);
        t.push(vec!["0.01".into(), value(1.0, Format::Markdown)]);
        let s = t.render(Format::Markdown);
        let widths: Vec<usize> = s.lines().map(str::len).collect();
        assert!(widths.windows(2).all(|w| w[0] == w[1]), "{s}");
    }

    #[test]
    fn csv_quoting() {
        let mut t = Table::new(["a"]);
        t.push(vec!["x,\"y\"".into()]);
        assert_eq!(t.render(Format::Csv), "a\n\"x,\"\"y\"\"\"\n");
    }
}
