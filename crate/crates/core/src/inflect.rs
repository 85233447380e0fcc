//! Noun number inflection: an irregular table plus suffix rules.

const IRREGULAR: &[(&str, &str)] = &[
    ("men", "man"),
    ("women", "woman"),
    ("children", "child"),
    ("people", "person"),
    ("persons", "person"),
    ("mice", "mouse"),
    ("geese", "goose"),
    ("feet", "foot"),
    ("teeth", "tooth"),
    ("oxen", "ox"),
    ("lice", "louse"),
    ("dice", "die"),
    ("criteria", "criterion"),
    ("phenomena", "phenomenon"),
    ("data", "datum"),
    ("cacti", "cactus"),
    ("fungi", "fungus"),
    ("knives", "knife"),
    ("wives", "wife"),
    ("lives", "life"),
    ("leaves", "leaf"),
    ("wolves", "wolf"),
    ("halves", "half"),
    ("calves", "calf"),
    ("shelves", "shelf"),
    ("thieves", "thief"),
    ("species", "species"),
    ("series", "series"),
    ("sheep", "sheep"),
    ("deer", "deer"),
    ("fish", "fish"),
];

/// Singular of an irregular plural, if listed.
pub fn irregular_singular(word: &str) -> Option<&'static str> {
    let w = word.to_lowercase();
    IRREGULAR.iter().find(|(p, _)| *p == w).map(|(_, s)| *s)
}

pub fn is_irregular_plural(word: &str) -> bool {
    let w = word.to_lowercase();
    IRREGULAR.iter().any(|(p, s)| *p == w && p != s)
}

/// Candidate singular forms of `word`, most plausible first. The input
/// itself is never included. Case of the first letter is preserved.
pub fn singular_candidates(word: &str) -> Vec<String> {
    let lower = word.to_lowercase();
    let mut out = Vec::new();
    if let Some(s) = irregular_singular(&lower) {
        if s != lower {
            out.push(s.to_string());
        }
        return recase(word, out);
    }
    if let Some(stem) = lower.strip_suffix("ies") {
        if stem.len() > 1 {
            out.push(format!("{stem}y"));
        }
    }
    let strip_s = lower.len() > 2 && lower.ends_with('s') && !lower.ends_with("ss") && !lower.ends_with("us") && !lower.ends_with("is");
    let sibilant = ["sses", "shes", "ches", "xes", "zes"].iter().find_map(|suf| lower.strip_suffix(suf).map(|stem| (stem, suf)));
    if let Some((stem, suf)) = sibilant {
        out.push(format!("{stem}{}", &suf[..suf.len() - 2]));
    }
    if strip_s {
        out.push(lower[..lower.len() - 1].to_string());
    }
    if sibilant.is_none() {
        if let Some(stem) = lower.strip_suffix("es") {
            if stem.len() > 1 {
                out.push(stem.to_string());
            }
        }
    }
    out.dedup();
    recase(word, out)
}

/// Best-guess singular without a vocabulary.
pub fn singular(word: &str) -> String {
    singular_candidates(word).into_iter().next().unwrap_or_else(|| word.to_string())
}

fn recase(original: &str, forms: Vec<String>) -> Vec<String> {
    if original.chars().next().is_some_and(char::is_uppercase) {
        forms.into_iter().map(|f| crate::dlmodel::capitalize(&f)).collect()
    } else {
        forms
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_and_irregular() {
        assert_eq!(singular("men"), "man");
        assert_eq!(singular("Mammoths"), "Mammoth");
        assert_eq!(singular("boxes"), "box");
        assert_eq!(singular("families"), "family");
        assert_eq!(singular("houses"), "house");
        assert_eq!(singular("classes"), "class");
        assert_eq!(singular("species"), "species");
        assert_eq!(singular("glass"), "glass");
        assert_eq!(singular("people"), "person");
    }

    #[test]
    fn candidates_cover_ambiguous_es() {
        let c = singular_candidates("houses");
        assert_eq!(c[0], "house");
        assert!(c.contains(&"hous".to_string()));
        assert!(singular_candidates("buses").contains(&"bus".to_string()));
    }
}
