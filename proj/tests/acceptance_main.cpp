// Release gate: runs the eight corpus-backed checks and prints one line per
// criterion. Exits nonzero if any criterion fails.

#include <iostream>

#include "liesq/verify.hpp"

#ifndef LIESQ_DEFAULT_CORPUS
#define LIESQ_DEFAULT_CORPUS "data/golden/corpus.json"
#endif

int main(int argc, char** argv) {
    using namespace liesq;
    const std::string path = argc > 1 ? argv[1] : LIESQ_DEFAULT_CORPUS;
    try {
        const Corpus corpus = load_corpus(path);
        VerifyOptions opt;
        opt.rank_bound = corpus.rank_bound;
        Verifier v(corpus, opt);
        bool ok = true;
        for (int id = 1; id <= 8; ++id) {
            const CriterionResult r = v.run(id);
            ok &= r.pass;
            std::cout << criterion_line(r) << std::endl;
        }
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
