use super::PartOfSpeech;

/// Suffix detachment rules, `(suffix, replacement)`, tried in order.
pub fn detachment_rules(pos: PartOfSpeech) -> &'static [(&'static str, &'static str)] {
    match pos {
        PartOfSpeech::Noun => &[
            ("s", ""),
            ("ses", "s"),
            ("ves", "f"),
            ("xes", "x"),
            ("zes", "z"),
            ("ches", "ch"),
            ("shes", "sh"),
            ("men", "man"),
            ("ies", "y"),
        ],
        PartOfSpeech::Verb => &[
            ("s", ""),
            ("ies", "y"),
            ("es", "e"),
            ("es", ""),
            ("ed", "e"),
            ("ed", ""),
            ("ing", "e"),
            ("ing", ""),
        ],
        PartOfSpeech::Adjective => &[("er", ""), ("est", ""), ("er", "e"), ("est", "e")],
        PartOfSpeech::Adverb => &[],
    }
}

fn detach(forms: &[String], pos: PartOfSpeech) -> Vec<String> {
    let mut out = Vec::new();
    for form in forms {
        for (suffix, replacement) in detachment_rules(pos) {
            if let Some(stem) = form.strip_suffix(suffix) {
                if !stem.is_empty() {
                    out.push(format!("{stem}{replacement}"));
                }
            }
        }
    }
    out
}

/// Morphological analysis over an index-membership predicate.
///
/// Candidates are, in order: exception-list bases, the word itself, then one
/// round of suffix detachment. When none of those is a known lemma, detachment
/// is repeated on the previous round's outputs until something matches or no
/// rule applies.
pub(crate) fn analyze(
    word: &str,
    pos: PartOfSpeech,
    exceptions: Option<&[String]>,
    is_lemma: impl Fn(&str) -> bool,
) -> Vec<String> {
    let mut result: Vec<String> = Vec::new();
    let keep = |candidate: &str, result: &mut Vec<String>| {
        if is_lemma(candidate) && !result.iter().any(|r| r == candidate) {
            result.push(candidate.to_string());
        }
    };

    for base in exceptions.unwrap_or_default() {
        keep(base, &mut result);
    }
    keep(word, &mut result);

    let mut forms = detach(&[word.to_string()], pos);
    for form in &forms {
        keep(form, &mut result);
    }
    while result.is_empty() && !forms.is_empty() {
        forms = detach(&forms, pos);
        for form in &forms {
            keep(form, &mut result);
        }
    }
    result
}
