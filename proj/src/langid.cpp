#include "subfreq/langid.hpp"
#include "subfreq/errors.hpp"
#include "subfreq/textnorm.hpp"
#include "subfreq/unicode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace subfreq {

LangGuess identify_line(std::string_view line, const LanguageIdentifier& id) {
    if (line.empty())
        throw StatsError("identify_line: empty line");
    try {
        return id.identify(line);
    } catch (...) {
        return {"unknown", 0.0};
    }
}

namespace {

struct Profile {
    std::string_view code;
    std::unordered_set<std::string_view> words;
};

const std::array<Profile, 6>& profiles() {
    static const std::array<Profile, 6> p = {{
        {"en",
         {"the", "and", "is", "are", "was", "were", "be", "been", "to", "of",
          "in", "it", "you", "we", "they", "this", "that", "these", "those",
          "for", "on", "with", "have", "has", "had", "not", "but", "what",
          "all", "can", "will", "would", "should", "could", "so", "just",
          "like", "get", "got", "about", "out", "up", "down", "now", "one",
          "two", "here", "there", "when", "where", "why", "how", "who",
          "your", "my", "our", "his", "her", "their", "them", "he", "she",
          "i", "do", "does", "did", "from", "at", "as", "if", "or", "an",
          "by", "please", "thanks", "thank", "welcome", "back", "see",
          "know", "go", "going", "come", "today", "tomorrow", "everyone",
          "people", "time", "more", "very", "good", "great", "new", "next",
          "last", "every", "day", "let", "make", "want", "need", "than",
          "then", "too", "also", "because", "before", "after", "over",
          "under", "again", "still", "never", "always", "into", "us"}},
        {"es",
         {"el", "la", "los", "las", "de", "del", "que", "y", "es", "en",
          "un", "una", "unos", "unas", "por", "para", "con", "sin", "se",
          "su", "sus", "al", "lo", "como", "más", "pero", "le", "les", "ya",
          "o", "este", "esta", "estos", "estas", "sí", "porque", "entre",
          "cuando", "muy", "sobre", "también", "hasta", "hay", "donde",
          "desde", "todo", "toda", "todos", "todas", "nos", "durante", "ni",
          "contra", "otros", "otro", "otra", "otras", "ese", "esa", "eso",
          "esto", "antes", "después", "qué", "cómo", "cuándo", "dónde",
          "quién", "gracias", "bien", "aquí", "allí", "ahora", "hoy",
          "mañana", "noche", "día", "años", "año", "vez", "veces", "nunca",
          "siempre", "nada", "algo", "alguien", "mucho", "mucha", "muchos",
          "muchas", "poco", "nuestro", "nuestra", "nosotros", "usted",
          "ustedes", "tiene", "tienen", "tengo", "estar", "está", "están",
          "estaba", "fue", "ser", "son", "era"}},
        {"id",
         {"yang", "dan", "di", "ke", "dari", "ini", "itu", "untuk",
          "dengan", "tidak", "akan", "pada", "juga", "saya", "kami", "kita",
          "kamu", "dia", "mereka", "ada", "adalah", "bisa", "sudah",
          "belum", "atau", "tapi", "tetapi", "jadi", "kalau", "karena",
          "seperti", "harus", "saat", "ketika", "tahun", "baru", "sangat",
          "hanya", "masih", "bagi", "sama", "telah", "sebagai", "semua",
          "orang", "banyak", "lebih", "paling", "sekali", "lagi", "hari",
          "pagi", "malam", "besok", "kemarin", "sekarang", "nanti", "bulan",
          "minggu", "jam", "rumah", "jalan", "anak", "punya", "mau",
          "ingin", "perlu", "boleh", "setiap", "beberapa", "dalam", "luar",
          "atas", "bawah", "depan", "belakang", "dekat", "jauh", "besar",
          "kecil", "bagus", "baik", "terima", "kasih", "tolong", "selamat"}},
        {"fr",
         {"le", "les", "des", "du", "et", "est", "qui", "ne", "pas",
          "pour", "dans", "ce", "cette", "ces", "il", "elle", "ils",
          "elles", "nous", "vous", "je", "tu", "au", "aux", "avec", "sur",
          "mais", "ou", "où", "plus", "très", "tout", "tous", "toute",
          "toutes", "être", "avoir", "fait", "faire", "aussi", "alors",
          "après", "avant", "chez", "merci", "bonjour", "oui", "non",
          "quoi", "quand", "comment", "pourquoi", "parce", "jamais",
          "toujours", "rien", "quelque", "beaucoup", "peu", "notre",
          "votre", "leur", "sa", "ses", "mon", "ma", "mes", "ton", "ta",
          "tes"}},
        {"de",
         {"der", "die", "das", "und", "ist", "im", "den", "dem", "ein",
          "eine", "einen", "einem", "nicht", "mit", "für", "auf", "sich",
          "auch", "aber", "nach", "bei", "aus", "wenn", "wir", "ihr",
          "sie", "er", "ich", "du", "wie", "wer", "wo", "warum", "dann",
          "denn", "noch", "schon", "sehr", "gut", "heute", "morgen",
          "danke", "bitte", "ja", "nein", "kein", "keine", "haben", "hat",
          "hatte", "sind", "war", "waren", "werden", "wird", "kann",
          "können", "muss", "müssen", "soll", "mehr", "immer", "nie",
          "alles", "nichts", "etwas", "man", "zum", "zur", "über", "unter",
          "vor", "hinter", "zwischen"}},
        {"pt",
         {"o", "os", "as", "um", "uma", "do", "da", "dos", "das", "e",
          "é", "em", "no", "na", "nas", "sem", "seu", "sua", "ao", "aos",
          "mais", "mas", "já", "ou", "isto", "isso", "quando", "muito",
          "também", "até", "há", "onde", "tudo", "nós", "vocês", "você",
          "não", "sim", "obrigado", "bem", "aqui", "agora", "hoje",
          "amanhã", "noite", "dia", "ano", "anos", "vez", "nunca",
          "sempre", "nada", "algo", "tem", "têm", "tenho", "está",
          "estão", "foi", "são", "era"}},
    }};
    return p;
}

// diacritics and punctuation that point at one Latin language
const std::unordered_map<char32_t, std::pair<std::size_t, double>>&
char_boosts() {
    // maps codepoint -> (profile index, weight)
    static const std::unordered_map<char32_t, std::pair<std::size_t, double>>
        m = {
            {U'ñ', {1, 2.0}}, {U'¿', {1, 3.0}}, {U'¡', {1, 3.0}},
            {U'ß', {4, 3.0}}, {U'ä', {4, 1.0}}, {U'ö', {4, 1.0}},
            {U'ü', {4, 1.0}}, {U'ã', {5, 2.0}}, {U'õ', {5, 2.0}},
            {U'ç', {3, 0.5}}, {U'è', {3, 1.0}}, {U'ê', {3, 1.0}},
            {U'à', {3, 0.5}}, {U'ô', {3, 1.0}}, {U'û', {3, 1.0}},
            {U'œ', {3, 2.0}},
        };
    return m;
}

} // namespace

LangGuess BuiltinIdentifier::identify(std::string_view raw) const {
    const auto line = tokens::strip_sentinels(raw);

    std::size_t letters = 0, latin = 0, han = 0, kana = 0, hangul = 0;
    std::size_t cyrillic = 0, greek = 0, arabic = 0, hebrew = 0, thai = 0;
    std::size_t devanagari = 0;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto cp = uni::decode(line, pos);
        if (!uni::is_word_char(cp) || uni::is_digit_char(cp))
            continue;
        ++letters;
        switch (uni::script_of(cp)) {
        case uni::Script::Latin: ++latin; break;
        case uni::Script::Han: ++han; break;
        case uni::Script::Hiragana:
        case uni::Script::Katakana: ++kana; break;
        case uni::Script::Hangul: ++hangul; break;
        case uni::Script::Cyrillic: ++cyrillic; break;
        case uni::Script::Greek: ++greek; break;
        case uni::Script::Arabic: ++arabic; break;
        case uni::Script::Hebrew: ++hebrew; break;
        case uni::Script::Thai: ++thai; break;
        case uni::Script::Devanagari: ++devanagari; break;
        case uni::Script::Other: break;
        }
    }
    if (letters == 0)
        return {"unknown", 0.0};

    const auto frac = [&](std::size_t n) {
        return static_cast<double>(n) / static_cast<double>(letters);
    };
    if (kana >= 1 && frac(han + kana) >= 0.5)
        return {"ja", frac(han + kana)};
    if (frac(han) >= 0.5)
        return {"zh", frac(han)};
    if (frac(hangul) >= 0.5)
        return {"ko", frac(hangul)};
    if (frac(cyrillic) >= 0.5)
        return {"ru", frac(cyrillic)};
    if (frac(greek) >= 0.5)
        return {"el", frac(greek)};
    if (frac(arabic) >= 0.5)
        return {"ar", frac(arabic)};
    if (frac(hebrew) >= 0.5)
        return {"he", frac(hebrew)};
    if (frac(thai) >= 0.5)
        return {"th", frac(thai)};
    if (frac(devanagari) >= 0.5)
        return {"hi", frac(devanagari)};
    if (frac(latin) < 0.5)
        return {"unknown", 0.0};

    const auto& profs = profiles();
    std::array<double, 6> scores{};
    const auto lowered = uni::nfkc_lower(line);
    const auto words = tokenize_regex(lowered);
    for (const auto& w : words)
        for (std::size_t k = 0; k < profs.size(); ++k)
            if (profs[k].words.count(w))
                scores[k] += 1.0;

    pos = 0;
    while (pos < lowered.size()) {
        const auto cp = uni::decode(lowered, pos);
        const auto it = char_boosts().find(cp);
        if (it != char_boosts().end())
            scores[it->second.first] += it->second.second;
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k < scores.size(); ++k)
        if (scores[k] > scores[best])
            best = k;
    if (scores[best] <= 0.0)
        return {"unknown", 0.0};

    double second = 0.0;
    for (std::size_t k = 0; k < scores.size(); ++k)
        if (k != best)
            second = std::max(second, scores[k]);

    const double hit_frac =
        std::min(1.0, scores[best] / std::max<std::size_t>(words.size(), 1));
    const double margin = 1.0 - second / scores[best];
    const double conf =
        std::clamp(std::sqrt(hit_frac) * (0.4 + 0.6 * margin), 0.0, 1.0);
    return {std::string(profs[best].code), conf};
}

std::shared_ptr<const LanguageIdentifier> builtin_identifier() {
    static const auto instance = std::make_shared<BuiltinIdentifier>();
    return instance;
}

} // namespace subfreq
