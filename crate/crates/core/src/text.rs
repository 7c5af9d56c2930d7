//! Tokenization shared by adjective extraction and the baseline.

/// Lowercased maximal runs of alphabetic characters.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphabetic())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_on_non_alphabetic() {
        assert_eq!(tokenize("A good, GOOD movie"), ["a", "good", "good", "movie"]);
        assert_eq!(tokenize("it's 2nd-rate!"), ["it", "s", "nd", "rate"]);
        assert!(tokenize("").is_empty());
        assert!(tokenize(" 123 ... ").is_empty());
    }
}
