use std::fmt::Write as _;

use super::{SeriesCoeff, SeriesError, TrigSeries};

fn csv_err(line: usize, message: impl Into<String>) -> SeriesError {
    SeriesError::Csv {
        line,
        message: message.into(),
    }
}

/// Reads `n,a,b` rows; the row with `n = 0` holds the mean.
pub fn read_series_csv(text: &str) -> Result<TrigSeries, SeriesError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| csv_err(1, e.to_string()))?;
    if header.iter().collect::<Vec<_>>() != ["n", "a", "b"] {
        return Err(csv_err(1, "expected header n,a,b"));
    }
    let mut series = TrigSeries::default();
    let mut mean_seen = false;
    for (idx, record) in reader.records().enumerate() {
        let line = idx + 2;
        let record = record.map_err(|e| csv_err(line, e.to_string()))?;
        if record.len() != 3 {
            return Err(csv_err(
                line,
                format!("expected 3 fields, got {}", record.len()),
            ));
        }
        let n: u32 = record[0]
            .parse()
            .map_err(|_| csv_err(line, format!("bad harmonic index {:?}", &record[0])))?;
        let a: SeriesCoeff = record[1].parse()?;
        let b: SeriesCoeff = record[2].parse()?;
        if n == 0 {
            if mean_seen || !b.is_zero() {
                return Err(csv_err(line, "mean row must appear once as 0,a,0"));
            }
            mean_seen = true;
            series.mean = a;
        } else {
            series.add_harmonic(n, a, b);
        }
    }
    Ok(series)
}

pub fn write_series_csv(s: &TrigSeries) -> String {
    let mut out = String::from("n,a,b\n");
    if !s.mean().is_zero() {
        writeln!(out, "0,{},0", s.mean()).expect("string write");
    }
    for (n, a, b) in s.harmonics() {
        writeln!(out, "{n},{a},{b}").expect("string write");
    }
    out
}

pub fn write_samples_csv(xs: &[f64], ys: &[f64]) -> String {
    let mut out = String::from("x,y\n");
    for (x, y) in xs.iter().zip(ys) {
        writeln!(out, "{x:.16e},{y:.16e}").expect("string write");
    }
    out
}

/// A bare polyline on an 800×400 canvas.
pub fn write_samples_svg(xs: &[f64], ys: &[f64]) -> String {
    let (w, h, pad) = (800.0, 400.0, 10.0);
    let range = |v: &[f64]| {
        let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if hi > lo {
            (lo, hi)
        } else {
            (lo - 1.0, lo + 1.0)
        }
    };
    let (x0, x1) = range(xs);
    let (y0, y1) = range(ys);
    let points: Vec<String> = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let px = pad + (x - x0) / (x1 - x0) * (w - 2.0 * pad);
            let py = h - pad - (y - y0) / (y1 - y0) * (h - 2.0 * pad);
            format!("{px:.3},{py:.3}")
        })
        .collect();
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"{}\"/>\n</svg>\n",
        points.join(" ")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::series::builtin_series;

    #[test]
    fn series_roundtrip() {
        let g = builtin_series("absx", 3).unwrap();
        let text = write_series_csv(&g);
        assert!(text.starts_with("n,a,b\n0,1/2*pi,0\n1,-4*pi^(-1),0\n"));
        assert_eq!(read_series_csv(&text).unwrap(), g);
    }

    #[test]
    fn plain_rationals() {
        let s = read_series_csv("n, a, b\n0, 1/2, 0\n2, 0, -3/4\n").unwrap();
        assert_eq!(*s.mean(), SeriesCoeff::rational(rat(1, 2)));
        assert_eq!(s.harmonic(2).unwrap().1, &SeriesCoeff::rational(rat(-3, 4)));
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            read_series_csv("x,y\n"),
            Err(SeriesError::Csv { line: 1, .. })
        ));
        assert!(matches!(
            read_series_csv("n,a,b\n0,1,1\n"),
            Err(SeriesError::Csv { line: 2, .. })
        ));
        assert!(matches!(
            read_series_csv("n,a,b\n-1,1,1\n"),
            Err(SeriesError::Csv { line: 2, .. })
        ));
        assert!(matches!(
            read_series_csv("n,a,b\n1,x,1\n"),
            Err(SeriesError::BadCoefficient { .. })
        ));
    }

    #[test]
    fn sample_output() {
        let text = write_samples_csv(&[0.0, 0.1], &[1.0, -1.0 / 3.0]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "x,y");
        assert_eq!(lines[2], "1.0000000000000001e-1,-3.3333333333333331e-1");
        let back: f64 = lines[2].split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(back, -1.0 / 3.0);
        let svg = write_samples_svg(&[0.0, 1.0], &[2.0, 2.0]);
        assert!(svg.contains("<polyline") && svg.contains("10.000,"));
    }
}
