#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "lct/errors.hpp"
#include "lct/tokenize.hpp"

using namespace lct;

TEST_CASE("default tokenizer counts runs") {
    RunTokenizer tok;
    CHECK(tok.token_length("") == 0);
    CHECK(tok.token_length("id_0") == 3);  // "id" + "_" + "0"
    CHECK(tok.token_length("extremelyLongFunctionName") == 7);  // ceil(25/4)
    CHECK(tok.token_length("x") == 1);
    CHECK(tok.token_length("id_1234") == 3);
    CHECK(tok.token_length("a b") == 3);
}

TEST_CASE("default tokenizer is compositional across run boundaries") {
    RunTokenizer tok;
    const std::string pieces[] = {"alpha", "_", "beta42", "(", "gamma_delta", ");"};
    std::string joined;
    std::size_t sum = 0;
    for (const auto& p : pieces) {
        joined += p;
        sum += tok.token_length(p);
    }
    // "alpha_beta42" splits the same way joined or alone: letter runs and
    // digit runs never merge across a non-alnum boundary.
    CHECK(tok.token_length(joined) == sum);
}

TEST_CASE("bucket thresholds are inclusive") {
    RunTokenizer tok;
    CHECK(bucket(tok, "") == LengthBucket::below_2000);
    // "+" costs one token each, so length is exact by construction.
    CHECK(bucket(tok, std::string(1999, '+')) == LengthBucket::below_2000);
    CHECK(bucket(tok, std::string(2000, '+')) == LengthBucket::ge_2000);
    CHECK(bucket(tok, std::string(4000, '+')) == LengthBucket::ge_4000);
    CHECK(bucket(tok, std::string(8000, '+')) == LengthBucket::ge_8000);
    CHECK(bucket(tok, std::string(9000, '+')) == LengthBucket::ge_8000);
}

TEST_CASE("bucketing is monotone in token length") {
    RunTokenizer tok;
    std::size_t previous_len = 0;
    auto previous_bucket = LengthBucket::below_2000;
    for (std::size_t n : {0, 1, 1999, 2000, 2001, 3999, 4000, 7999, 8000, 20000}) {
        std::string text(n, '+');
        auto b = bucket(tok, text);
        CHECK(tok.token_length(text) >= previous_len);
        CHECK(static_cast<int>(b) >= static_cast<int>(previous_bucket));
        previous_len = n;
        previous_bucket = b;
    }
}

TEST_CASE("bpe tokenizer applies merges by rank") {
    std::string path = "test_merges.txt";
    {
        std::ofstream out(path);
        out << "# rank order\n";
        out << "l o\n";
        out << "lo w\n";
        out << "e r\n";
    }
    BpeTokenizer tok(path);
    CHECK(tok.id() == "bpe:test_merges.txt");
    CHECK(tok.token_length("") == 0);
    CHECK(tok.token_length("low") == 1);       // l o -> lo, lo w -> low
    CHECK(tok.token_length("lower") == 2);     // [low, er]
    CHECK(tok.token_length("low low") == 3);   // low, space, low
    std::remove(path.c_str());
}

TEST_CASE("bpe tokenizer rejects a missing merges file") {
    CHECK_THROWS_AS(BpeTokenizer("no_such_merges_file.txt"), IoError);
}

TEST_CASE("tokenizer ids are stable") {
    RunTokenizer a;
    RunTokenizer b;
    CHECK(a.id() == "default");
    CHECK(a.id() == b.id());
    CHECK(a.token_length("stable_input_text") == b.token_length("stable_input_text"));
}
