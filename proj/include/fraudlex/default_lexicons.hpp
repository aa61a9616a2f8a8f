#pragma once

#include <string_view>

namespace fraudlex {

/// Built-in marker lexicon. Kept byte-identical to data/lexicons/markers-v1.json.
inline constexpr std::string_view kDefaultMarkerLexicon = R"json({
  "version": "markers-v1",
  "categories": {
    "causation": ["because", "effect", "hence", "therefore", "so that", "due to", "as a result", "consequently", "since", "reason", "cause", "caused", "thus"],
    "negation": ["no", "not", "never", "none", "nothing", "nobody", "can't", "cannot", "didn't", "don't", "doesn't", "won't", "wasn't", "isn't", "aren't", "haven't", "hasn't", "couldn't", "wouldn't", "shouldn't", "neither", "nor"],
    "hedging": ["may be", "maybe", "i guess", "sort of", "kind of", "perhaps", "possibly", "probably", "i think", "i suppose", "i believe", "might", "somewhat", "apparently"],
    "qualified_assertions": ["needed", "attempted", "tried", "had to", "wanted to", "meant to", "supposed to", "intended"],
    "temporal_lacunae": ["later that day", "afterwards", "after that", "later on", "some time later", "the next thing", "eventually", "at some point", "then later"],
    "overzealous_expression": ["i swear to god", "i swear", "honestly", "to be honest", "believe me", "trust me", "cross my heart", "truthfully", "to tell the truth", "i promise"],
    "memory_loss": ["i forget", "i forgot", "can't remember", "cannot remember", "don't remember", "don't recall", "can't recall", "i don't know", "not sure", "no idea"],
    "third_person_plural_pronouns": ["they", "them", "theirs", "their", "themselves", "they're", "they've", "they'd", "they'll"],
    "pronouns": ["i", "me", "mine"],
    "negative_emotion": ["afraid", "sad", "hate", "abandon", "hurt", "angry", "upset", "worried", "scared", "fear", "annoyed", "frustrated", "unhappy", "depressed"],
    "negative_sentiment": ["abominable", "anger", "anxious", "bad", "awful", "terrible", "horrible", "poor", "wrong", "problem", "unfair", "disappointed"],
    "positive_emotion": ["happy", "brave", "love", "nice", "sweet", "glad", "pleased", "delighted", "excited", "proud", "cheerful"],
    "positive_sentiment": ["admire", "amazing", "assure", "charm", "great", "excellent", "good", "wonderful", "fantastic", "perfect", "fine", "brilliant"],
    "disfluencies": ["uh", "um", "you know", "er", "ah", "erm", "hmm", "uhm", "i mean"],
    "self_reference": ["i", "my", "mine", "myself", "i'm", "i've", "i'd", "i'll"],
    "nominalised_verbs": ["education", "arrangement", "payment", "application", "transaction", "agreement", "statement", "investigation", "confirmation", "verification", "cancellation", "authorisation", "authorization", "registration", "settlement", "withdrawal"]
  }
}
)json";

/// Built-in valence lexicon. Kept byte-identical to data/lexicons/valence-v1.json.
inline constexpr std::string_view kDefaultValenceLexicon = R"json({
  "version": "valence-v1",
  "negation_window": 3,
  "negators": ["not", "no", "never", "don't", "didn't", "can't", "cannot", "won't", "isn't", "wasn't", "doesn't", "aren't", "nothing", "neither", "nor", "without"],
  "entries": {
    "happy": 0.8, "love": 0.9, "nice": 0.6, "sweet": 0.6, "brave": 0.5, "glad": 0.6, "pleased": 0.6,
    "delighted": 0.8, "excited": 0.6, "proud": 0.6, "cheerful": 0.7, "admire": 0.6, "amazing": 0.8,
    "assure": 0.3, "charm": 0.5, "great": 0.7, "excellent": 0.9, "good": 0.5, "wonderful": 0.9,
    "fantastic": 0.8, "perfect": 0.8, "fine": 0.3, "brilliant": 0.8, "thanks": 0.4, "thank": 0.4,
    "helpful": 0.5, "easy": 0.3, "safe": 0.4,
    "sad": -0.6, "hate": -0.9, "afraid": -0.6, "hurt": -0.6, "angry": -0.7, "upset": -0.6,
    "worried": -0.5, "scared": -0.6, "fear": -0.6, "annoyed": -0.5, "frustrated": -0.6, "unhappy": -0.7,
    "depressed": -0.8, "abandon": -0.5, "abominable": -0.9, "anger": -0.7, "anxious": -0.5, "bad": -0.6,
    "awful": -0.8, "terrible": -0.9, "horrible": -0.9, "poor": -0.4, "wrong": -0.5, "problem": -0.4,
    "unfair": -0.6, "disappointed": -0.6, "stolen": -0.6, "lost": -0.4, "difficult": -0.4
  }
}
)json";

} // namespace fraudlex
