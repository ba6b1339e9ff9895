//! One-way ANOVA F-test feature selection.

use std::collections::BTreeMap;

use super::FeatureError;

/// Per-column F statistic: `F = (SSB / (c-1)) / (SSW / (n-c))` for `c`
/// classes over `n` rows. Columns with zero within-class variance but
/// nonzero between-class variance score infinity and rank above every
/// finite column; columns with zero between-class variance score 0.
pub fn f_scores(rows: &[Vec<f64>], labels: &[String]) -> Result<Vec<f64>, FeatureError> {
    if rows.is_empty() || rows.len() != labels.len() {
        return Err(FeatureError::EmptyInput);
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(FeatureError::RaggedRows);
    }
    let mut groups: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, label) in labels.iter().enumerate() {
        groups.entry(label.as_str()).or_default().push(i);
    }
    let c = groups.len();
    if c < 2 {
        return Err(FeatureError::SingleClass);
    }
    let n = rows.len();

    let mut scores = Vec::with_capacity(width);
    for col in 0..width {
        let grand_mean: f64 = rows.iter().map(|r| r[col]).sum::<f64>() / n as f64;
        let mut ssb = 0.0;
        let mut ssw = 0.0;
        for members in groups.values() {
            let gmean: f64 =
                members.iter().map(|&i| rows[i][col]).sum::<f64>() / members.len() as f64;
            ssb += members.len() as f64 * (gmean - grand_mean).powi(2);
            ssw += members
                .iter()
                .map(|&i| (rows[i][col] - gmean).powi(2))
                .sum::<f64>();
        }
        let score = if ssw == 0.0 || n == c {
            if ssb > 0.0 {
                f64::INFINITY
            } else {
                0.0
            }
        } else {
            (ssb / (c - 1) as f64) / (ssw / (n - c) as f64)
        };
        scores.push(score);
    }
    Ok(scores)
}

/// Top-`k` column indices by F score, ties broken by smaller index.
/// Returns the selected indices (in rank order) and the full score vector.
pub fn f_test_select(
    rows: &[Vec<f64>],
    labels: &[String],
    k: usize,
) -> Result<(Vec<usize>, Vec<f64>), FeatureError> {
    let scores = f_scores(rows, labels)?;
    if k == 0 || k > scores.len() {
        return Err(FeatureError::BadSelectionSize {
            k,
            columns: scores.len(),
        });
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .expect("F scores are never NaN")
            .then(a.cmp(&b))
    });
    order.truncate(k);
    Ok((order, scores))
}

/// Projects a row onto selected columns.
pub fn project(row: &[f64], selected: &[usize]) -> Vec<f64> {
    selected.iter().map(|&i| row[i]).collect()
}
