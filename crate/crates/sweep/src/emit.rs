//! CSV emission and re-ingestion.
//!
//! The record schema is fixed:
//! `state,channel,noisy,r,p_a,p_b,p_c,measure,value,oracle,diff`
//! with floats printed to 12 significant digits in scientific notation and
//! every row newline-terminated, so identical runs are byte-identical.

use std::io::Write;
use std::path::Path;

use crate::config::{ChannelKind, StateKind};
use crate::error::{Result, SweepError};
use crate::run::MeasureRecord;

pub const CSV_HEADER: &str = "state,channel,noisy,r,p_a,p_b,p_c,measure,value,oracle,diff";

/// Formats a float with 12 significant digits, deterministically.
pub fn fmt_float(x: f64) -> String {
    // Normalize the sign of zero so -0.0 cannot leak into golden files.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

fn opt_float(x: Option<f64>) -> String {
    x.map(fmt_float).unwrap_or_default()
}

/// Renders records as a CSV string (header + one line per record).
pub fn records_to_csv(records: &[MeasureRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for rec in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            rec.state,
            rec.channel,
            rec.noisy,
            fmt_float(rec.r),
            fmt_float(rec.p_a),
            fmt_float(rec.p_b),
            fmt_float(rec.p_c),
            rec.measure,
            fmt_float(rec.value),
            opt_float(rec.oracle),
            opt_float(rec.diff),
        ));
    }
    out
}

/// Writes records to a CSV file.
pub fn emit_csv(records: &[MeasureRecord], path: &Path) -> Result<()> {
    let mut file = std::fs::File::create(path).map_err(SweepError::io(path))?;
    file.write_all(records_to_csv(records).as_bytes())
        .map_err(SweepError::io(path))
}

fn parse_state(s: &str) -> Result<StateKind> {
    match s {
        "ghz" => Ok(StateKind::Ghz),
        "w" => Ok(StateKind::W),
        other => Err(SweepError::Usage(format!("unknown state \"{other}\" in records file"))),
    }
}

fn parse_channel(s: &str) -> Result<ChannelKind> {
    match s {
        "amplitude_damping" => Ok(ChannelKind::AmplitudeDamping),
        "depolarizing" => Ok(ChannelKind::Depolarizing),
        other => Err(SweepError::Usage(format!(
            "unknown channel \"{other}\" in records file"
        ))),
    }
}

fn parse_float(field: &str, line: usize) -> Result<f64> {
    field
        .parse::<f64>()
        .map_err(|_| SweepError::Usage(format!("line {line}: bad float \"{field}\"")))
}

fn parse_opt_float(field: &str, line: usize) -> Result<Option<f64>> {
    if field.is_empty() {
        Ok(None)
    } else {
        parse_float(field, line).map(Some)
    }
}

/// Reads a records CSV produced by [`emit_csv`].
pub fn read_records(path: &Path) -> Result<Vec<MeasureRecord>> {
    let text = std::fs::read_to_string(path).map_err(SweepError::io(path))?;
    parse_records(&text)
}

/// Parses records CSV text.
pub fn parse_records(text: &str) -> Result<Vec<MeasureRecord>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        _ => {
            return Err(SweepError::Usage(format!(
                "records file must start with the header \"{CSV_HEADER}\""
            )))
        }
    }
    let mut records = Vec::new();
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 11 {
            return Err(SweepError::Usage(format!(
                "line {lineno}: expected 11 fields, got {}",
                fields.len()
            )));
        }
        records.push(MeasureRecord {
            state: parse_state(fields[0])?,
            channel: parse_channel(fields[1])?,
            noisy: fields[2].to_string(),
            r: parse_float(fields[3], lineno)?,
            p_a: parse_float(fields[4], lineno)?,
            p_b: parse_float(fields[5], lineno)?,
            p_c: parse_float(fields[6], lineno)?,
            measure: fields[7].to_string(),
            value: parse_float(fields[8], lineno)?,
            oracle: parse_opt_float(fields[9], lineno)?,
            diff: parse_opt_float(fields[10], lineno)?,
        });
    }
    Ok(records)
}

/// Writes arbitrary text to a file with path-context errors.
pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(SweepError::io(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_record() -> MeasureRecord {
        MeasureRecord {
            state: StateKind::Ghz,
            channel: ChannelKind::AmplitudeDamping,
            noisy: "A".into(),
            r: 0.5235987755982988,
            p_a: 0.5,
            p_b: 0.0,
            p_c: 0.0,
            measure: "one_tangle_A".into(),
            value: 0.5,
            oracle: None,
            diff: None,
        }
    }

    #[test]
    fn empty_records_give_header_only() {
        let csv = records_to_csv(&[]);
        assert_eq!(csv, format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn one_record_gives_two_lines_and_eleven_fields() {
        let csv = records_to_csv(&[sample_record()]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1].split(',').count(), 11);
        assert!(csv.ends_with('\n'));
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_float(0.5), "5.00000000000e-1");
        assert_eq!(fmt_float(0.0), "0.00000000000e0");
        assert_eq!(fmt_float(-0.0), "0.00000000000e0");
        assert_eq!(fmt_float(1.0), "1.00000000000e0");
    }

    #[test]
    fn csv_round_trips() {
        let mut with_oracle = sample_record();
        with_oracle.oracle = Some(0.536_566_092_485_493_1);
        with_oracle.diff = Some(0.036_566_092_485_493_1);
        let records = vec![sample_record(), with_oracle];
        let parsed = parse_records(&records_to_csv(&records)).unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0].oracle, None);
        assert!((parsed[1].oracle.unwrap() - 0.536_566_092_485_493_1).abs() < 1e-12);
        assert_eq!(parsed[1].measure, "one_tangle_A");
    }

    #[test]
    fn header_mismatch_is_rejected() {
        assert!(parse_records("nope\n").is_err());
    }
}
