#include "clts/lexicon.hpp"

#include <string>
#include <unordered_set>

namespace clts::lexicon {

namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet kStopEn = {
    "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and", "any",
    "are", "as", "at", "be", "because", "been", "before", "being", "below", "between", "both",
    "but", "by", "can", "could", "did", "do", "does", "doing", "down", "during", "each", "few",
    "for", "from", "further", "had", "has", "have", "having", "he", "her", "here", "hers",
    "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is", "it", "its",
    "itself", "just", "may", "me", "might", "more", "most", "must", "my", "myself", "no", "nor",
    "not", "now", "of", "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves",
    "out", "over", "own", "same", "shall", "she", "should", "so", "some", "such", "than", "that",
    "the", "their", "theirs", "them", "themselves", "then", "there", "these", "they", "this",
    "those", "through", "to", "too", "under", "until", "up", "upon", "very", "was", "we",
    "were", "what", "when", "where", "which", "while", "who", "whom", "whose", "why", "will",
    "with", "within", "without", "would", "you", "your", "yours", "yourself", "yourselves",
    "'s", "n't", "s", "t", "us", "one", "many", "much", "however", "although", "though", "yet",
    "still", "even", "ever", "since", "across", "among", "around", "along", "via", "per",
    "another", "every", "either", "neither", "whether", "according", "already", "almost",
    "than", "thus", "therefore", "whereas", "whose", "onto", "toward", "towards", "unless"};

const WordSet kStopFr = {
    "a", "à", "afin", "ai", "aie", "ainsi", "alors", "au", "aucun", "aucune", "aussi", "autre",
    "autres", "aux", "avaient", "avait", "avant", "avec", "avoir", "c'", "ce", "ceci", "cela",
    "celle", "celles", "celui", "cependant", "ces", "cet", "cette", "ceux", "chaque", "chez",
    "comme", "comment", "d'", "dans", "de", "des", "donc", "dont", "du", "elle", "elles", "en",
    "encore", "entre", "est", "et", "étaient", "était", "été", "être", "eu", "eux", "fut", "il",
    "ils", "j'", "je", "l'", "la", "le", "les", "leur", "leurs", "lors", "lui", "m'", "ma",
    "mais", "me", "même", "mêmes", "mes", "moi", "mon", "n'", "ne", "ni", "nos", "notre",
    "nous", "on", "ont", "ou", "où", "par", "parce", "pas", "pendant", "peu", "plus",
    "plusieurs", "pour", "pourquoi", "puis", "qu'", "quand", "que", "quel", "quelle",
    "quelles", "quels", "qui", "s'", "sa", "sans", "se", "selon", "sera", "ses", "si", "sien",
    "son", "sont", "sous", "sur", "t'", "ta", "te", "tes", "toi", "ton", "tous", "tout",
    "toute", "toutes", "très", "tu", "un", "une", "vers", "vos", "votre", "vous", "y", "ayant",
    "depuis", "dès", "déjà", "lorsque", "puisque", "tandis", "toujours", "soit", "sont",
    "seront", "serait", "seraient", "aurait", "auraient", "avons", "avez", "sommes", "êtes",
    "ceux-ci", "celle-ci", "celui-ci", "là", "ici", "non", "oui", "dont", "ainsi", "parmi"};

const WordSet kStopPt = {
    "a", "à", "ao", "aos", "aquela", "aquelas", "aquele", "aqueles", "aquilo", "as", "às",
    "até", "com", "como", "da", "das", "de", "dela", "delas", "dele", "deles", "depois", "do",
    "dos", "e", "é", "ela", "elas", "ele", "eles", "em", "entre", "era", "eram", "essa",
    "essas", "esse", "esses", "esta", "está", "estão", "estas", "este", "estes", "eu", "foi",
    "foram", "há", "isso", "isto", "já", "lhe", "lhes", "mais", "mas", "me", "mesmo", "meu",
    "minha", "muito", "na", "nas", "não", "nem", "no", "nos", "nós", "num", "numa", "o", "os",
    "ou", "para", "pela", "pelas", "pelo", "pelos", "por", "qual", "quando", "que", "quem",
    "se", "sem", "ser", "seu", "seus", "só", "sua", "suas", "também", "te", "tem", "têm",
    "teu", "tua", "um", "uma", "umas", "uns", "você", "vocês", "sobre", "ainda", "após",
    "cada", "onde", "porque", "pois", "sendo", "seja", "será", "seria", "tinha", "todos",
    "todas", "toda", "todo", "outro", "outra", "outros", "outras", "segundo", "desde"};

const WordSet kStopEs = {
    "a", "al", "algo", "algunas", "algunos", "ante", "antes", "como", "con", "contra", "cual",
    "cuando", "de", "del", "desde", "donde", "durante", "e", "el", "él", "ella", "ellas",
    "ellos", "en", "entre", "era", "eran", "es", "esa", "esas", "ese", "eso", "esos", "esta",
    "está", "están", "estas", "este", "esto", "estos", "fue", "fueron", "ha", "han", "hasta",
    "hay", "la", "las", "le", "les", "lo", "los", "más", "me", "mi", "mis", "mucho", "muy",
    "nada", "ni", "no", "nos", "nosotros", "o", "otra", "otras", "otro", "otros", "para",
    "pero", "poco", "por", "porque", "que", "qué", "quien", "quienes", "se", "sea", "ser",
    "si", "sí", "sin", "sobre", "su", "sus", "también", "tanto", "te", "tiene", "tienen",
    "todo", "todos", "toda", "todas", "tu", "tus", "un", "una", "unas", "uno", "unos", "y",
    "ya", "yo", "cada", "según", "sido", "siendo", "será", "sería", "había", "habían", "tras",
    "aunque", "mientras", "luego", "además", "así", "aún", "dentro"};

const WordSet kAbbrevEn = {"dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "jr.", "sr.", "vs.",
                           "etc.", "e.g.", "i.e.", "no.", "inc.", "ltd.", "co.", "corp.",
                           "gen.", "gov.", "sen.", "rep.", "jan.", "feb.", "mar.", "apr.",
                           "aug.", "sept.", "sep.", "oct.", "nov.", "dec.", "u.s.", "u.k.",
                           "a.m.", "p.m.", "approx.", "dept.", "est.", "fig.", "mt."};

const WordSet kAbbrevFr = {"m.", "mm.", "mme.", "mmes.", "mlle.", "dr.", "pr.", "st.", "ste.",
                           "etc.", "p.", "cf.", "av.", "apr.", "env.", "hab.", "n°.", "min."};

const WordSet kAbbrevPt = {"sr.", "sra.", "srs.", "dr.", "dra.", "prof.", "profa.", "etc.",
                           "av.", "p.", "n.º", "pág."};

const WordSet kAbbrevEs = {"sr.", "sra.", "srta.", "dr.", "dra.", "prof.", "etc.", "av.",
                           "p.", "pág.", "ud.", "uds.", "ee.uu."};

const WordSet kVerbEn = {
    "is", "are", "was", "were", "be", "been", "being", "am", "has", "have", "had", "do", "does",
    "did", "will", "would", "shall", "should", "can", "could", "may", "might", "must", "said",
    "says", "say", "made", "make", "makes", "took", "take", "takes", "gave", "give", "gives",
    "went", "go", "goes", "came", "come", "comes", "found", "find", "finds", "told", "tell",
    "tells", "became", "become", "becomes", "left", "leave", "leaves", "began", "begin",
    "begins", "kept", "keep", "keeps", "held", "hold", "holds", "brought", "bring", "brings",
    "hit", "hits", "put", "puts", "set", "sets", "ran", "run", "runs", "won", "win", "wins",
    "lost", "lose", "loses", "met", "meet", "meets", "sent", "send", "sends", "built", "build",
    "builds", "paid", "pay", "pays", "saw", "see", "sees", "seen", "knew", "know", "knows",
    "known", "thought", "think", "thinks", "got", "get", "gets", "fell", "fall", "falls",
    "rose", "rise", "rises", "killed", "kill", "kills", "struck", "strike", "strikes", "sat",
    "sit", "sits", "ate", "eat", "eats", "arrived", "arrive", "arrives", "announced", "warned",
    "reported", "caused", "destroyed", "collapsed", "remain", "remains", "remained", "need",
    "needs", "needed", "want", "wants", "wanted", "help", "helps", "helped", "agreed",
    "expected", "believed", "claimed", "declared", "continue", "continues", "continued"};

const WordSet kAdjEn = {
    "new", "old", "big", "small", "large", "great", "high", "low", "long", "short", "young",
    "early", "late", "last", "first", "second", "third", "next", "good", "bad", "best", "worst",
    "major", "minor", "main", "public", "private", "local", "national", "international",
    "foreign", "global", "human", "strong", "weak", "heavy", "light", "full", "free", "hard",
    "easy", "real", "whole", "former", "recent", "several", "huge", "severe", "powerful",
    "deadly", "massive", "little", "certain", "different", "important", "economic", "political",
    "financial", "military", "nuclear", "official", "economical", "general", "special", "top",
    "key", "serious", "dead", "missing", "injured", "hot", "cold", "dark", "black", "white",
    "red", "green", "blue", "french", "english", "american", "european", "british", "spanish",
    "portuguese", "chinese", "japanese", "russian", "german", "italian", "indian", "african"};

const WordSet kVerbFr = {
    "est", "sont", "était", "étaient", "sera", "seront", "serait", "seraient", "a", "ont",
    "avait", "avaient", "aura", "auront", "aurait", "fut", "été", "être", "avoir", "fait",
    "font", "faisait", "dit", "disent", "déclaré", "annoncé", "peut", "peuvent", "pouvait",
    "doit", "doivent", "devait", "va", "vont", "allait", "vient", "viennent", "venait",
    "frappé", "tué", "détruit", "causé", "touché", "reste", "restent", "restait", "semble",
    "semblent", "prend", "prennent", "donne", "donnent", "met", "mettent", "voit", "voient",
    "sait", "savent", "veut", "veulent", "trouve", "trouvent", "arrive", "arrivent",
    "sommes", "êtes", "suis", "es", "ai", "as", "avons", "avez", "eu", "mangé", "assis"};

const WordSet kAdjFr = {
    "nouveau", "nouvelle", "nouveaux", "nouvelles", "grand", "grande", "grands", "grandes",
    "petit", "petite", "petits", "petites", "premier", "première", "premiers", "premières",
    "dernier", "dernière", "derniers", "dernières", "bon", "bonne", "bons", "bonnes",
    "mauvais", "mauvaise", "haut", "haute", "bas", "basse", "long", "longue", "jeune",
    "jeunes", "vieux", "vieille", "gros", "grosse", "fort", "forte", "forts", "fortes",
    "lourd", "lourde", "principal", "principale", "principaux", "général", "générale",
    "français", "française", "anglais", "anglaise", "américain", "américaine", "européen",
    "européenne", "espagnol", "espagnole", "portugais", "portugaise", "chinois", "chinoise",
    "japonais", "japonaise", "russe", "allemand", "allemande", "mondial", "mondiale",
    "national", "nationale", "nationaux", "international", "internationale", "public",
    "publique", "plusieurs", "autre", "seul", "seule", "même", "mort", "morte", "morts",
    "blessé", "blessés", "important", "importante", "importants", "importantes", "noir",
    "noire", "blanc", "blanche", "rouge", "vert", "verte", "bleu", "bleue", "second",
    "seconde", "deuxième", "troisième", "violent", "violente", "puissant", "puissante"};

const WordSet kVerbPt = {"é", "são", "era", "eram", "foi", "foram", "será", "serão", "está",
                         "estão", "estava", "tem", "têm", "tinha", "teve", "há", "disse",
                         "fez", "pode", "podem", "deve", "devem", "vai", "vão"};

const WordSet kVerbEs = {"es", "son", "era", "eran", "fue", "fueron", "será", "serán",
                         "está", "están", "estaba", "ha", "han", "había", "tiene", "tienen",
                         "tenía", "hay", "dijo", "hizo", "puede", "pueden", "debe", "deben",
                         "va", "van"};

const WordSet* stopwords_for(std::string_view lang) {
  if (lang == "en") return &kStopEn;
  if (lang == "fr") return &kStopFr;
  if (lang == "pt") return &kStopPt;
  if (lang == "es") return &kStopEs;
  return nullptr;
}

}  // namespace

bool has_stopwords(std::string_view lang) { return stopwords_for(lang) != nullptr; }

bool is_stopword(std::string_view lowered, std::string_view lang) {
  const WordSet* set = stopwords_for(lang);
  return set != nullptr && set->contains(lowered);
}

bool is_abbreviation(std::string_view lowered, std::string_view lang) {
  if (lang == "en") return kAbbrevEn.contains(lowered);
  if (lang == "fr") return kAbbrevFr.contains(lowered);
  if (lang == "pt") return kAbbrevPt.contains(lowered);
  if (lang == "es") return kAbbrevEs.contains(lowered);
  return false;
}

std::optional<Pos> lookup(std::string_view lowered, std::string_view lang) {
  const WordSet* verbs = nullptr;
  const WordSet* adjectives = nullptr;
  if (lang == "en") {
    verbs = &kVerbEn;
    adjectives = &kAdjEn;
  } else if (lang == "fr") {
    verbs = &kVerbFr;
    adjectives = &kAdjFr;
  } else if (lang == "pt") {
    verbs = &kVerbPt;
  } else if (lang == "es") {
    verbs = &kVerbEs;
  }
  if (verbs && verbs->contains(lowered)) return Pos::VERB;
  if (adjectives && adjectives->contains(lowered)) return Pos::ADJ;
  if (is_stopword(lowered, lang)) return Pos::OTHER;
  return std::nullopt;
}

}  // namespace clts::lexicon
