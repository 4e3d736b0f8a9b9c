//! Text formats shared with the CLI: the `s,mass` spectrum CSV, the numeric
//! matrix CSV, and the PAC instance file. Parse errors carry the 1-based line
//! number and field so diagnostics can name the offending spot.

use thiserror::Error;

use crate::pac::{Hypothesis, PacError, PacInstance};
use crate::spectra::{CardinalScale, Spectrum, SpectrumError};

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("line 1: expected header `s,mass`, got {0:?}")]
    BadHeader(String),
    #[error("line {line}, field {field}: invalid decimal literal {text:?}")]
    BadNumber { line: usize, field: usize, text: String },
    #[error("line {line}: expected {want} fields, got {got}")]
    FieldCount { line: usize, want: usize, got: usize },
    #[error("line {line}: scale column must be strictly increasing")]
    ScaleNotIncreasing { line: usize },
    #[error("no data lines found")]
    NoData,
    #[error("invalid spectrum: {0}")]
    Spectrum(#[from] SpectrumError),
    #[error("invalid instance: {0}")]
    Instance(#[from] PacError),
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_number(line: usize, field: usize, text: &str) -> Result<f64, ParseError> {
    let t = text.trim();
    t.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| ParseError::BadNumber { line, field, text: t.to_string() })
}

/// Parse the spectrum CSV: header `s,mass`, then one `scale,mass` pair per
/// line; `#` lines and blank lines ignored.
pub fn parse_spectrum(text: &str) -> Result<Spectrum, ParseError> {
    let mut lines = data_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::NoData)?;
    if header.split(',').map(str::trim).collect::<Vec<_>>() != ["s", "mass"] {
        let _ = hline;
        return Err(ParseError::BadHeader(header.to_string()));
    }
    let mut scale = Vec::new();
    let mut mass = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split(',').collect();
        if fields.len() != 2 {
            return Err(ParseError::FieldCount { line, want: 2, got: fields.len() });
        }
        let s = parse_number(line, 1, fields[0])?;
        if let Some(prev) = scale.last() {
            if s <= *prev {
                return Err(ParseError::ScaleNotIncreasing { line });
            }
        }
        scale.push(s);
        mass.push(parse_number(line, 2, fields[1])?);
    }
    if scale.is_empty() {
        return Err(ParseError::NoData);
    }
    Ok(Spectrum::new(CardinalScale::new(scale)?, mass)?)
}

/// Parse the matrix CSV: comma-separated rows of decimal literals, equal row
/// lengths, `#` comments ignored.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<f64>>, ParseError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (line, l) in data_lines(text) {
        let fields: Vec<&str> = l.split(',').collect();
        if let Some(first) = rows.first() {
            if fields.len() != first.len() {
                return Err(ParseError::FieldCount { line, want: first.len(), got: fields.len() });
            }
        }
        let row = fields
            .iter()
            .enumerate()
            .map(|(i, f)| parse_number(line, i + 1, f))
            .collect::<Result<Vec<f64>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::NoData);
    }
    Ok(rows)
}

/// Parse a PAC instance: the first data line holds the sampling weights, each
/// later line one hypothesis's values over the domain points (an optional
/// leading non-numeric field names the hypothesis). Values outside [0,1] are
/// affinely rescaled; the applied `(scale, offset)` is returned.
pub fn parse_pac_instance(text: &str) -> Result<(PacInstance, f64, f64), ParseError> {
    let mut weight_row: Option<Vec<f64>> = None;
    let mut hypotheses: Vec<Hypothesis> = Vec::new();
    for (line, l) in data_lines(text) {
        let fields: Vec<&str> = l.split(',').collect();
        if weight_row.is_none() {
            let w = fields
                .iter()
                .enumerate()
                .map(|(i, f)| parse_number(line, i + 1, f))
                .collect::<Result<Vec<f64>, _>>()?;
            weight_row = Some(w);
            continue;
        }
        let want = weight_row.as_ref().unwrap().len();
        let (name, value_fields) = if fields[0].trim().parse::<f64>().is_err() {
            (fields[0].trim().to_string(), &fields[1..])
        } else {
            (format!("h{}", hypotheses.len() + 1), &fields[..])
        };
        if value_fields.len() != want {
            return Err(ParseError::FieldCount { line, want, got: value_fields.len() });
        }
        let offset = fields.len() - value_fields.len();
        let values = value_fields
            .iter()
            .enumerate()
            .map(|(i, f)| parse_number(line, i + 1 + offset, f))
            .collect::<Result<Vec<f64>, _>>()?;
        hypotheses.push(Hypothesis { name, values });
    }
    let weights = weight_row.ok_or(ParseError::NoData)?;
    let points: Vec<f64> = (0..weights.len()).map(|i| i as f64).collect();
    let (inst, scale, offset) = PacInstance::new_rescaled(points, weights, hypotheses)?;
    Ok((inst, scale, offset))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_round_trip() {
        let text = "# comment\ns,mass\n0.0,0.2\n1.0,0.3\n2.0,0.5\n";
        let sp = parse_spectrum(text).unwrap();
        assert_eq!(sp.scale().values(), &[0.0, 1.0, 2.0]);
        assert_eq!(sp.mass(), &[0.2, 0.3, 0.5]);
    }

    #[test]
    fn spectrum_errors_name_line_and_field() {
        assert_eq!(parse_spectrum("x,y\n"), Err(ParseError::BadHeader("x,y".into())));
        assert_eq!(
            parse_spectrum("s,mass\n0.0,abc\n"),
            Err(ParseError::BadNumber { line: 2, field: 2, text: "abc".into() })
        );
        assert_eq!(
            parse_spectrum("s,mass\n1.0,0.5\n0.5,0.5\n"),
            Err(ParseError::ScaleNotIncreasing { line: 3 })
        );
        assert_eq!(
            parse_spectrum("s,mass\n1.0\n"),
            Err(ParseError::FieldCount { line: 2, want: 2, got: 1 })
        );
        assert_eq!(parse_spectrum("s,mass\n"), Err(ParseError::NoData));
    }

    #[test]
    fn matrix_parsing() {
        let m = parse_matrix("1,0\n0,1\n").unwrap();
        assert_eq!(m, vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
        assert_eq!(
            parse_matrix("1,0\n0\n"),
            Err(ParseError::FieldCount { line: 2, want: 2, got: 1 })
        );
        assert_eq!(parse_matrix("# nothing\n"), Err(ParseError::NoData));
    }

    #[test]
    fn instance_parsing_with_names_and_rescale() {
        let text = "0.5,0.5\nid,0,1\n0.3,0.3\n";
        let (inst, scale, offset) = parse_pac_instance(text).unwrap();
        assert_eq!(scale, 1.0);
        assert_eq!(offset, 0.0);
        assert_eq!(inst.hypotheses()[0].name, "id");
        assert_eq!(inst.hypotheses()[1].name, "h2");

        let text = "0.5,0.5\nwide,-2,6\n";
        let (inst, scale, offset) = parse_pac_instance(text).unwrap();
        assert_eq!(scale, 0.125);
        assert_eq!(offset, -2.0);
        assert_eq!(inst.hypotheses()[0].values, vec![0.0, 1.0]);
    }
}
