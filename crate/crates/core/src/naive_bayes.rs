//! Naive Bayes over binary features with add-constant smoothing.
//!
//! Used both for adjective polarity (three anchor features, three labels) and
//! for the word-presence document baseline (one `has(word)` feature per
//! vocabulary entry, two labels).

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::adjective::PolarityLabel;
use crate::error::{Error, Result};

/// Expected-likelihood smoothing constant.
pub const DEFAULT_SMOOTHING: f64 = 0.5;

const NORMALIZATION_TOLERANCE: f64 = 1e-9;
const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct NaiveBayesModel {
    /// Sorted in tie-break order (negative, neutral, positive).
    labels: Vec<PolarityLabel>,
    features: Vec<String>,
    priors: Vec<f64>,
    /// `[P(value = 0 | label), P(value = 1 | label)]` at `feature * labels + label`.
    conditionals: Vec<[f64; 2]>,
    /// `None` for models read back from text, which does not record it.
    smoothing: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Prediction {
    pub label: PolarityLabel,
    /// One entry per model label, in tie-break order.
    pub posteriors: Vec<(PolarityLabel, f64)>,
}

impl Prediction {
    pub fn posterior(&self, label: PolarityLabel) -> Option<f64> {
        self.posteriors
            .iter()
            .find(|(l, _)| *l == label)
            .map(|&(_, p)| p)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InformativeFeature {
    pub feature: String,
    pub value: bool,
    /// Label with the largest conditional for this feature value.
    pub best_label: PolarityLabel,
    /// Label with the smallest conditional, the ratio's denominator.
    pub other_label: PolarityLabel,
    pub ratio: f64,
}

impl NaiveBayesModel {
    /// Train from `(feature values, label)` rows.
    ///
    /// Every label in `labels` must occur at least once; each row must have
    /// one value per feature name.
    pub fn train<R: AsRef<[bool]>>(
        feature_names: &[String],
        labels: &[PolarityLabel],
        rows: &[(R, PolarityLabel)],
        smoothing: f64,
    ) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Training("empty training set".into()));
        }
        if !(smoothing > 0.0) {
            return Err(Error::Training(format!("smoothing constant {smoothing} must be positive")));
        }
        let mut labels = labels.to_vec();
        labels.sort();
        labels.dedup();

        let n_features = feature_names.len();
        let n_labels = labels.len();
        let mut label_counts = vec![0usize; n_labels];
        let mut present = vec![0usize; n_features * n_labels];
        for (row, label) in rows {
            let values = row.as_ref();
            if values.len() != n_features {
                return Err(Error::Training(format!(
                    "row has {} values, expected {n_features}",
                    values.len()
                )));
            }
            let li = labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::Training(format!("unexpected label {label}")))?;
            label_counts[li] += 1;
            for (fi, &v) in values.iter().enumerate() {
                if v {
                    present[fi * n_labels + li] += 1;
                }
            }
        }
        if let Some(li) = label_counts.iter().position(|&c| c == 0) {
            return Err(Error::Training(format!(
                "class absent from training set: {}",
                labels[li]
            )));
        }

        let total = rows.len() as f64;
        let priors = label_counts
            .iter()
            .map(|&c| (c as f64 + smoothing) / (total + smoothing * n_labels as f64))
            .collect();
        let conditionals = present
            .iter()
            .enumerate()
            .map(|(i, &ones)| {
                let n = label_counts[i % n_labels] as f64;
                let denom = n + 2.0 * smoothing;
                let zeros = n - ones as f64;
                [(zeros + smoothing) / denom, (ones as f64 + smoothing) / denom]
            })
            .collect();

        Ok(NaiveBayesModel {
            labels,
            features: feature_names.to_vec(),
            priors,
            conditionals,
            smoothing: Some(smoothing),
        })
    }

    /// Build from explicit tables, checking both normalization invariants.
    pub fn from_tables(
        labels: Vec<PolarityLabel>,
        features: Vec<String>,
        priors: Vec<f64>,
        conditionals: Vec<[f64; 2]>,
        smoothing: Option<f64>,
    ) -> Result<Self> {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by_key(|&i| labels[i]);
        let n = labels.len();
        let model = NaiveBayesModel {
            labels: order.iter().map(|&i| labels[i]).collect(),
            priors: order.iter().map(|&i| priors[i]).collect(),
            conditionals: (0..features.len())
                .flat_map(|f| order.iter().map(move |&i| (f, i)))
                .map(|(f, i)| conditionals[f * n + i])
                .collect(),
            features,
            smoothing,
        };
        model.validate()?;
        Ok(model)
    }

    fn validate(&self) -> Result<()> {
        let n = self.labels.len();
        if n == 0 || self.priors.len() != n || self.conditionals.len() != n * self.features.len() {
            return Err(Error::model(0, "inconsistent table sizes"));
        }
        let mut sorted = self.labels.clone();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::model(0, "duplicate label"));
        }
        let all_probabilities = self
            .priors
            .iter()
            .chain(self.conditionals.iter().flatten())
            .all(|p| p.is_finite() && *p >= 0.0 && *p <= 1.0);
        if !all_probabilities {
            return Err(Error::model(0, "probability outside [0, 1]"));
        }
        let prior_sum: f64 = self.priors.iter().sum();
        if (prior_sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::model(0, format!("priors sum to {prior_sum}")));
        }
        for (i, c) in self.conditionals.iter().enumerate() {
            if (c[0] + c[1] - 1.0).abs() > NORMALIZATION_TOLERANCE {
                return Err(Error::model(
                    0,
                    format!(
                        "conditionals for {} | {} sum to {}",
                        self.features[i / n],
                        self.labels[i % n],
                        c[0] + c[1]
                    ),
                ));
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> &[PolarityLabel] {
        &self.labels
    }

    pub fn features(&self) -> &[String] {
        &self.features
    }

    pub fn smoothing(&self) -> Option<f64> {
        self.smoothing
    }

    fn label_index(&self, label: PolarityLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn prior(&self, label: PolarityLabel) -> Option<f64> {
        self.label_index(label).map(|i| self.priors[i])
    }

    pub fn conditional(&self, feature: &str, value: bool, label: PolarityLabel) -> Option<f64> {
        let fi = self.features.iter().position(|f| f == feature)?;
        let li = self.label_index(label)?;
        Some(self.conditionals[fi * self.labels.len() + li][value as usize])
    }

    /// Unnormalized log scores, one per label.
    pub fn log_scores(&self, values: &[bool]) -> Vec<f64> {
        assert_eq!(values.len(), self.features.len(), "feature vector length");
        let n = self.labels.len();
        (0..n)
            .map(|li| {
                values
                    .iter()
                    .enumerate()
                    .map(|(fi, &v)| self.conditionals[fi * n + li][v as usize].ln())
                    .sum::<f64>()
                    + self.priors[li].ln()
            })
            .collect()
    }

    /// Posterior over labels; ties go to the earliest label in
    /// negative < neutral < positive order.
    pub fn predict(&self, values: &[bool]) -> Prediction {
        let scores = self.log_scores(values);
        Self::prediction_from_log_scores(&self.labels, &scores)
    }

    pub(crate) fn prediction_from_log_scores(labels: &[PolarityLabel], scores: &[f64]) -> Prediction {
        let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        // Scores equal up to summation-order rounding count as ties.
        let slack = TIE_TOLERANCE * max.abs().max(1.0);
        let best = scores.iter().position(|&s| s >= max - slack).unwrap_or(0);
        let weights: Vec<f64> = scores.iter().map(|s| (s - max).exp()).collect();
        let z: f64 = weights.iter().sum();
        Prediction {
            label: labels[best],
            posteriors: labels
                .iter()
                .zip(&weights)
                .map(|(&l, w)| (l, w / z))
                .collect(),
        }
    }

    /// Feature values ranked by how strongly they separate two labels:
    /// largest conditional over smallest conditional across labels.
    pub fn most_informative_features(&self, k: usize) -> Vec<InformativeFeature> {
        let n = self.labels.len();
        let mut out = Vec::with_capacity(self.features.len() * 2);
        for (fi, feature) in self.features.iter().enumerate() {
            for value in [false, true] {
                let probs: Vec<f64> = (0..n)
                    .map(|li| self.conditionals[fi * n + li][value as usize])
                    .collect();
                let mut hi = 0;
                let mut lo = 0;
                for (i, p) in probs.iter().enumerate() {
                    if *p > probs[hi] {
                        hi = i;
                    }
                    if *p < probs[lo] {
                        lo = i;
                    }
                }
                if hi == lo {
                    lo = (hi + 1) % n;
                }
                out.push(InformativeFeature {
                    feature: feature.clone(),
                    value,
                    best_label: self.labels[hi],
                    other_label: self.labels[lo],
                    ratio: probs[hi] / probs[lo],
                });
            }
        }
        out.sort_by(|a, b| {
            b.ratio
                .total_cmp(&a.ratio)
                .then_with(|| a.feature.cmp(&b.feature))
                .then_with(|| b.value.cmp(&a.value))
        });
        out.truncate(k);
        out
    }

    /// Tab-separated text form: the header line, `prior` records, then `cond`
    /// records.
    pub fn to_text(&self, header: &str) -> String {
        let mut out = String::new();
        out.push_str(header);
        out.push('\n');
        self.write_records(&mut out);
        out
    }

    pub(crate) fn write_records(&self, out: &mut String) {
        let n = self.labels.len();
        for (label, p) in self.labels.iter().zip(&self.priors) {
            let _ = writeln!(out, "prior\t{label}\t{}", format_probability(*p));
        }
        for (fi, feature) in self.features.iter().enumerate() {
            for value in [0usize, 1] {
                for (li, label) in self.labels.iter().enumerate() {
                    let p = self.conditionals[fi * n + li][value];
                    let _ = writeln!(
                        out,
                        "cond\t{feature}\t{value}\t{label}\t{}",
                        format_probability(p)
                    );
                }
            }
        }
    }

    /// Parse the text form written by [`to_text`](Self::to_text).
    pub fn from_text(text: &str, header: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, first)) if first.trim_end() == header => {}
            Some((_, first)) => {
                return Err(Error::model(1, format!("expected header `{header}`, found `{first}`")))
            }
            None => return Err(Error::model(1, "empty model")),
        }
        let mut builder = TableBuilder::default();
        for (line_no, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            builder.record(line_no, &fields)?;
        }
        builder.finish()
    }
}

/// Accumulates `prior` and `cond` records while reading a model file.
#[derive(Default)]
pub(crate) struct TableBuilder {
    labels: Vec<PolarityLabel>,
    priors: Vec<f64>,
    features: Vec<String>,
    feature_index: HashMap<String, usize>,
    conds: HashMap<(usize, usize, PolarityLabel), f64>,
}

impl TableBuilder {
    /// Returns `Ok(false)` for record kinds this builder does not handle.
    pub(crate) fn record(&mut self, line_no: usize, fields: &[&str]) -> Result<bool> {
        match fields {
            ["prior", label, p] => {
                let label = parse_label(line_no, label)?;
                if self.labels.contains(&label) {
                    return Err(Error::model(line_no, format!("duplicate prior for {label}")));
                }
                self.labels.push(label);
                self.priors.push(parse_probability(line_no, p)?);
                Ok(true)
            }
            ["cond", feature, value, label, p] => {
                let value = match *value {
                    "0" => 0,
                    "1" => 1,
                    other => return Err(Error::model(line_no, format!("bad feature value `{other}`"))),
                };
                let label = parse_label(line_no, label)?;
                let next = self.features.len();
                let fi = *self.feature_index.entry(feature.to_string()).or_insert(next);
                if fi == next {
                    self.features.push(feature.to_string());
                }
                let p = parse_probability(line_no, p)?;
                if self.conds.insert((fi, value, label), p).is_some() {
                    return Err(Error::model(line_no, "duplicate conditional"));
                }
                Ok(true)
            }
            ["prior", ..] | ["cond", ..] => Err(Error::model(line_no, "wrong number of fields")),
            _ => Ok(false),
        }
    }

    pub(crate) fn finish(self) -> Result<NaiveBayesModel> {
        let n = self.labels.len();
        let mut conditionals = Vec::with_capacity(self.features.len() * n);
        for fi in 0..self.features.len() {
            for &label in &self.labels {
                let get = |v: usize| {
                    self.conds.get(&(fi, v, label)).copied().ok_or_else(|| {
                        Error::model(
                            0,
                            format!("missing cond for {}={v} | {label}", self.features[fi]),
                        )
                    })
                };
                conditionals.push([get(0)?, get(1)?]);
            }
        }
        if self.conds.len() != conditionals.len() * 2 {
            return Err(Error::model(0, "conditional for a label without a prior"));
        }
        NaiveBayesModel::from_tables(self.labels, self.features, self.priors, conditionals, None)
    }
}

fn parse_label(line_no: usize, s: &str) -> Result<PolarityLabel> {
    s.parse().map_err(|e: String| Error::model(line_no, e))
}

fn parse_probability(line_no: usize, s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::model(line_no, format!("bad probability `{s}`")))
}

/// Positional decimal with 17 significant digits.
pub fn format_probability(p: f64) -> String {
    if p == 0.0 || !p.is_finite() {
        return format!("{p:.16}");
    }
    let magnitude = p.abs().log10().floor() as i32;
    let decimals = (16 - magnitude).max(0) as usize;
    format!("{p:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use PolarityLabel::*;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    fn two_example_model() -> NaiveBayesModel {
        let rows = [
            (vec![false, false, true], Negative),
            (vec![true, false, false], Positive),
        ];
        NaiveBayesModel::train(
            &names(&["excellent", "mediocre", "poor"]),
            &[Negative, Positive],
            &rows,
            DEFAULT_SMOOTHING,
        )
        .unwrap()
    }

    #[test]
    fn hand_computed_smoothing() {
        let m = two_example_model();
        // (1 + 0.5) / (1 + 2 * 0.5)
        assert_eq!(m.conditional("poor", true, Negative), Some(0.75));
        assert_eq!(m.conditional("poor", true, Positive), Some(0.25));
        assert_eq!(m.conditional("excellent", false, Negative), Some(0.75));
        // (1 + 0.5) / (2 + 2 * 0.5)
        assert_eq!(m.prior(Negative), Some(0.5));

        // (0,0,1): negative 0.5*0.75*0.75*0.75, positive 0.5*0.25*0.75*0.25
        let p = m.predict(&[false, false, true]);
        assert_eq!(p.label, Negative);
        let expected = 0.421875 / (0.421875 + 0.046875);
        assert!((p.posterior(Negative).unwrap() - expected).abs() < 1e-12);

        let top = m.most_informative_features(10);
        // excellent=1 and poor=1 have ratio 3; their complements too.
        assert_eq!(top.len(), 6);
        assert!((top[0].ratio - 3.0).abs() < 1e-12);
        assert_eq!(top.iter().filter(|f| (f.ratio - 3.0).abs() < 1e-12).count(), 4);
        assert!(top[4..].iter().all(|f| (f.ratio - 1.0).abs() < 1e-12));
        assert!(m.most_informative_features(0).is_empty());
    }

    #[test]
    fn symmetric_input_gives_uniform_priors() {
        let rows: Vec<_> = [Negative, Neutral, Positive]
            .iter()
            .flat_map(|&l| std::iter::repeat((vec![true, false, true], l)).take(5))
            .collect();
        let m = NaiveBayesModel::train(
            &names(&["excellent", "mediocre", "poor"]),
            &[Negative, Neutral, Positive],
            &rows,
            DEFAULT_SMOOTHING,
        )
        .unwrap();
        for l in [Negative, Neutral, Positive] {
            assert!((m.prior(l).unwrap() - 1.0 / 3.0).abs() < 1e-9);
        }
        let p = m.predict(&[true, true, true]);
        assert_eq!(p.label, Negative);
        assert!(m.most_informative_features(6).iter().all(|f| f.ratio == 1.0));
    }

    #[test]
    fn uniform_model_ties_to_negative() {
        let m = NaiveBayesModel::from_tables(
            vec![Positive, Neutral, Negative],
            names(&["excellent", "mediocre", "poor"]),
            vec![1.0 / 3.0; 3],
            vec![[0.5, 0.5]; 9],
            None,
        )
        .unwrap();
        let p = m.predict(&[true, false, true]);
        assert_eq!(p.label, Negative);
        for (_, q) in &p.posteriors {
            assert!((q - 1.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn training_errors() {
        let empty: [(Vec<bool>, PolarityLabel); 0] = [];
        assert!(NaiveBayesModel::train(&names(&["a"]), &[Negative], &empty, 0.5).is_err());
        let err = NaiveBayesModel::train(
            &names(&["a"]),
            &[Negative, Positive],
            &[(vec![true], Negative)],
            0.5,
        )
        .unwrap_err();
        assert!(err.to_string().contains("class absent from training set"), "{err}");
    }

    #[test]
    fn text_round_trip_is_exact() {
        let m = two_example_model();
        let text = m.to_text("polarity-nb v1");
        assert!(text.starts_with("polarity-nb v1\nprior\tnegative\t0.50000000000000000\n"));
        assert!(text.contains("cond\tpoor\t1\tnegative\t0.75000000000000000\n"));
        let back = NaiveBayesModel::from_text(&text, "polarity-nb v1").unwrap();
        assert_eq!(back.labels, m.labels);
        assert_eq!(back.priors, m.priors);
        assert_eq!(back.conditionals, m.conditionals);
        assert_eq!(back.smoothing(), None);
    }

    #[test]
    fn loading_checks_normalization() {
        let text = "polarity-nb v1\nprior\tnegative\t0.6\nprior\tpositive\t0.6\n";
        assert!(NaiveBayesModel::from_text(text, "polarity-nb v1").is_err());
        let text = "polarity-nb v1\nprior\tnegative\t0.5\nprior\tpositive\t0.5\n\
                    cond\tpoor\t0\tnegative\t0.5\ncond\tpoor\t1\tnegative\t0.6\n\
                    cond\tpoor\t0\tpositive\t0.5\ncond\tpoor\t1\tpositive\t0.5\n";
        assert!(NaiveBayesModel::from_text(text, "polarity-nb v1").is_err());
        assert!(NaiveBayesModel::from_text("baseline-nb v1\n", "polarity-nb v1").is_err());
    }

    #[test]
    fn probability_formatting() {
        assert_eq!(format_probability(0.75), "0.75000000000000000");
        assert_eq!(format_probability(1.0), "1.0000000000000000");
        let third = format_probability(1.0 / 3.0);
        assert_eq!(third, "0.33333333333333331");
        assert_eq!(third.parse::<f64>().unwrap(), 1.0 / 3.0);
        assert_eq!(format_probability(0.0123), "0.012300000000000000");
    }
}
