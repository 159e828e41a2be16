//! Porter (1980) English stemmer.
//!
//! A direct implementation of the five-step suffix-stripping algorithm.
//! Within every step the longest matching suffix is selected and only that
//! rule's condition is tested; when the condition fails no other rule of the
//! step applies. Following the reference implementation, words of one or two
//! letters are returned unchanged (the published rules would strip e.g. "as"
//! to "a").
//!
//! Tokens may carry internal apostrophes ("planet's"); apostrophes are
//! dropped before stemming, which folds possessives into their base noun.
//! Words containing anything but lowercase ASCII letters after that are
//! returned as-is: the rules are defined over English letters only.

/// Stem a lowercase token.
pub fn stem(token: &str) -> String {
    let word: String = token
        .chars()
        .filter(|&c| c != '\'' && c != '\u{2019}')
        .collect();
    if word.len() <= 2 || !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return word;
    }
    let mut b = word.into_bytes();
    step1a(&mut b);
    step1b(&mut b);
    step1c(&mut b);
    step2(&mut b);
    step3(&mut b);
    step4(&mut b);
    step5a(&mut b);
    step5b(&mut b);
    String::from_utf8(b).expect("stemmer operates on ASCII")
}

/// True if position `i` holds a consonant. `y` counts as a vowel when it
/// follows a consonant.
fn is_consonant(b: &[u8], i: usize) -> bool {
    match b[i] {
        b'a' | b'e' | b'i' | b'o' | b'u' => false,
        b'y' => i == 0 || !is_consonant(b, i - 1),
        _ => true,
    }
}

/// The measure m of `b[..len]`: the number of vowel-consonant sequences,
/// i.e. m in the form `[C](VC)^m[V]`.
fn measure(b: &[u8], len: usize) -> usize {
    let mut m = 0;
    let mut i = 0;
    while i < len && is_consonant(b, i) {
        i += 1;
    }
    loop {
        while i < len && !is_consonant(b, i) {
            i += 1;
        }
        if i == len {
            return m;
        }
        while i < len && is_consonant(b, i) {
            i += 1;
        }
        m += 1;
        if i == len {
            return m;
        }
    }
}

/// `*v*`: the stem `b[..len]` contains a vowel.
fn has_vowel(b: &[u8], len: usize) -> bool {
    (0..len).any(|i| !is_consonant(b, i))
}

/// `*d`: `b[..len]` ends with a double consonant.
fn ends_double_consonant(b: &[u8], len: usize) -> bool {
    len >= 2 && b[len - 1] == b[len - 2] && is_consonant(b, len - 1)
}

/// `*o`: `b[..len]` ends consonant-vowel-consonant where the final consonant
/// is not w, x or y.
fn ends_cvc(b: &[u8], len: usize) -> bool {
    len >= 3
        && is_consonant(b, len - 1)
        && !is_consonant(b, len - 2)
        && is_consonant(b, len - 3)
        && !matches!(b[len - 1], b'w' | b'x' | b'y')
}

/// SSES -> SS, IES -> I, SS -> SS, S -> (empty).
fn step1a(b: &mut Vec<u8>) {
    if b.ends_with(b"sses") {
        b.truncate(b.len() - 2);
    } else if b.ends_with(b"ies") {
        b.truncate(b.len() - 3);
        b.push(b'i');
    } else if b.ends_with(b"ss") {
        // unchanged
    } else if b.ends_with(b"s") {
        b.pop();
    }
}

/// (m>0) EED -> EE, (*v*) ED -> , (*v*) ING -> , plus the cleanup rules that
/// restore an e, undouble a consonant or add an e after a short stem.
fn step1b(b: &mut Vec<u8>) {
    if b.ends_with(b"eed") {
        if measure(b, b.len() - 3) > 0 {
            b.pop();
        }
        return;
    }
    let removed = if b.ends_with(b"ed") && has_vowel(b, b.len() - 2) {
        b.truncate(b.len() - 2);
        true
    } else if b.ends_with(b"ing") && has_vowel(b, b.len() - 3) {
        b.truncate(b.len() - 3);
        true
    } else {
        false
    };
    if removed {
        if b.ends_with(b"at") || b.ends_with(b"bl") || b.ends_with(b"iz") {
            b.push(b'e');
        } else if ends_double_consonant(b, b.len()) {
            if !matches!(b[b.len() - 1], b'l' | b's' | b'z') {
                b.pop();
            }
        } else if measure(b, b.len()) == 1 && ends_cvc(b, b.len()) {
            b.push(b'e');
        }
    }
}

/// (*v*) Y -> I.
fn step1c(b: &mut [u8]) {
    let len = b.len();
    if b.ends_with(b"y") && has_vowel(b, len - 1) {
        b[len - 1] = b'i';
    }
}

/// Longest matching suffix wins; replace it when the stem has m > 0.
fn replace_longest(b: &mut Vec<u8>, rules: &[(&[u8], &[u8])]) {
    for (suffix, replacement) in rules {
        if b.ends_with(suffix) {
            let stem_len = b.len() - suffix.len();
            if measure(b, stem_len) > 0 {
                b.truncate(stem_len);
                b.extend_from_slice(replacement);
            }
            return;
        }
    }
}

fn step2(b: &mut Vec<u8>) {
    // Ordered by suffix length so the longest match is found first.
    const RULES: &[(&[u8], &[u8])] = &[
        (b"ational", b"ate"),
        (b"ization", b"ize"),
        (b"iveness", b"ive"),
        (b"fulness", b"ful"),
        (b"ousness", b"ous"),
        (b"tional", b"tion"),
        (b"biliti", b"ble"),
        (b"entli", b"ent"),
        (b"ousli", b"ous"),
        (b"ation", b"ate"),
        (b"alism", b"al"),
        (b"aliti", b"al"),
        (b"iviti", b"ive"),
        (b"enci", b"ence"),
        (b"anci", b"ance"),
        (b"izer", b"ize"),
        (b"abli", b"able"),
        (b"alli", b"al"),
        (b"ator", b"ate"),
        (b"eli", b"e"),
    ];
    replace_longest(b, RULES);
}

fn step3(b: &mut Vec<u8>) {
    const RULES: &[(&[u8], &[u8])] = &[
        (b"icate", b"ic"),
        (b"ative", b""),
        (b"alize", b"al"),
        (b"iciti", b"ic"),
        (b"ical", b"ic"),
        (b"ness", b""),
        (b"ful", b""),
    ];
    replace_longest(b, RULES);
}

/// (m>1) suffix -> (empty); ION additionally requires the stem to end in
/// s or t.
fn step4(b: &mut Vec<u8>) {
    const SUFFIXES: &[&[u8]] = &[
        b"ement",
        b"ance",
        b"ence",
        b"able",
        b"ible",
        b"ment",
        b"ant",
        b"ent",
        b"ion",
        b"ism",
        b"ate",
        b"iti",
        b"ous",
        b"ive",
        b"ize",
        b"al",
        b"er",
        b"ic",
        b"ou",
    ];
    for suffix in SUFFIXES {
        if b.ends_with(suffix) {
            let stem_len = b.len() - suffix.len();
            let ion_ok = *suffix != b"ion"
                || (stem_len >= 1 && matches!(b[stem_len - 1], b's' | b't'));
            if ion_ok && measure(b, stem_len) > 1 {
                b.truncate(stem_len);
            }
            return;
        }
    }
}

/// (m>1) E -> , (m=1 and not *o) E -> .
fn step5a(b: &mut Vec<u8>) {
    if b.ends_with(b"e") {
        let stem_len = b.len() - 1;
        let m = measure(b, stem_len);
        if m > 1 || (m == 1 && !ends_cvc(b, stem_len)) {
            b.pop();
        }
    }
}

/// (m>1 and *d and *L) -> single letter.
fn step5b(b: &mut Vec<u8>) {
    let len = b.len();
    if len >= 2 && b[len - 1] == b'l' && ends_double_consonant(b, len) && measure(b, len) > 1 {
        b.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_stems(cases: &[(&str, &str)]) {
        for (input, expected) in cases {
            assert_eq!(stem(input), *expected, "stem({input:?})");
        }
    }

    #[test]
    fn plural_and_participle_suffixes() {
        assert_stems(&[
            ("caresses", "caress"),
            ("ponies", "poni"),
            ("ties", "ti"),
            ("caress", "caress"),
            ("cats", "cat"),
            ("feed", "feed"),
            ("agreed", "agre"),
            ("bled", "bled"),
            ("sing", "sing"),
            ("conflated", "conflat"),
            ("troubled", "troubl"),
            ("sized", "size"),
            ("hopping", "hop"),
            ("tanned", "tan"),
            ("falling", "fall"),
            ("hissing", "hiss"),
            ("fizzed", "fizz"),
            ("failing", "fail"),
            ("filing", "file"),
        ]);
    }

    #[test]
    fn y_to_i() {
        assert_stems(&[("happy", "happi"), ("sky", "sky"), ("enjoy", "enjoi")]);
    }

    #[test]
    fn longest_match_wins_within_a_step() {
        // "rational" matches -ational (condition fails on the one-letter stem)
        // and must not then fall back to the -tional rule.
        assert_stems(&[("rational", "ration"), ("relational", "relat")]);
    }

    #[test]
    fn derived_suffix_chains() {
        assert_stems(&[
            ("generalization", "gener"),
            ("oscillators", "oscil"),
            ("vietnamization", "vietnam"),
            ("predication", "predic"),
            ("feudalism", "feudal"),
            ("decisiveness", "decis"),
            ("hopefulness", "hope"),
            ("formaliti", "formal"),
            ("formative", "form"),
            ("electriciti", "electr"),
            ("hopeful", "hope"),
            ("goodness", "good"),
        ]);
    }

    #[test]
    fn bare_e_and_double_l() {
        assert_stems(&[
            ("probate", "probat"),
            ("rate", "rate"),
            ("cease", "ceas"),
            ("controll", "control"),
            ("roll", "roll"),
        ]);
    }

    #[test]
    fn pipeline_examples() {
        assert_stems(&[
            ("atmospheres", "atmospher"),
            ("mars", "mar"),
            ("planet", "planet"),
        ]);
    }

    #[test]
    fn short_words_unchanged() {
        assert_stems(&[("as", "as"), ("is", "is"), ("s", "s"), ("by", "by")]);
    }

    #[test]
    fn apostrophes_are_dropped() {
        assert_eq!(stem("planet's"), "planet");
        assert_eq!(stem("don't"), "dont");
        assert_eq!(stem("planet\u{2019}s"), "planet");
    }

    #[test]
    fn non_ascii_tokens_pass_through() {
        assert_eq!(stem("naïve"), "naïve");
        assert_eq!(stem("tōkyō"), "tōkyō");
    }
}
