#include "boxdim/protocols.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace boxdim {

BitString parse_bits(const std::string& text) {
    if (text.empty()) {
        throw invalid_input("empty bit string");
    }
    BitString bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw invalid_input("bit strings may only contain 0 and 1");
        }
        bits.push_back(c - '0');
    }
    return bits;
}

std::string format_bits(const BitString& bits) {
    std::string out;
    out.reserve(bits.size());
    for (int b : bits) out.push_back(b ? '1' : '0');
    return out;
}

TruthTable parse_truth_table(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw invalid_input("truth table: missing header line");
    }
    std::istringstream hs(header);
    TruthTable table;
    if (!(hs >> table.alice_bits >> table.bob_bits) || table.alice_bits < 0 ||
        table.bob_bits < 0) {
        throw invalid_input("truth table: header must be 'n_alice n_bob' (line 1)");
    }
    if (table.alice_bits > 20 || table.bob_bits > 20) {
        throw cap_exceeded("truth table: header dimensions too large (line 1)");
    }
    table.values.reserve(static_cast<size_t>(table.rows()) * table.cols());
    for (int r = 0; r < table.rows(); ++r) {
        std::string line;
        if (!std::getline(in, line)) {
            throw invalid_input("truth table: expected " + std::to_string(table.rows()) +
                                " rows, got " + std::to_string(r));
        }
        if (static_cast<int>(line.size()) != table.cols()) {
            throw invalid_input("truth table: row length " + std::to_string(line.size()) +
                                " != " + std::to_string(table.cols()) + " (line " +
                                std::to_string(r + 2) + ")");
        }
        for (int c = 0; c < table.cols(); ++c) {
            if (line[c] != '0' && line[c] != '1') {
                throw invalid_input("truth table: bad character (line " + std::to_string(r + 2) +
                                    ", column " + std::to_string(c + 1) + ")");
            }
            table.values.push_back(line[c] - '0');
        }
    }
    return table;
}

TruthTable load_truth_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw invalid_input("cannot open truth table file '" + path + "'");
    }
    return parse_truth_table(in);
}

int replay(const ProtocolTranscript& transcript) {
    int k = transcript.measurement;
    if (k < 1 || k > static_cast<int>(transcript.prepared_label.size())) {
        throw invalid_input("transcript measurement index out of range");
    }
    return transcript.prepared_label[k - 1];
}

IndexResult index_protocol(const BitString& b, int k) {
    const int n = static_cast<int>(b.size());
    if (n < 1) {
        throw invalid_input("index protocol needs a nonempty string");
    }
    if (k < 1 || k > n) {
        throw invalid_input("index k out of range");
    }
    IndexResult result;
    result.transcript.prepared_label = b;  // zeta_i = b_i
    result.transcript.measurement = k;
    result.transcript.steps.push_back({"prepare", "zeta=" + format_bits(b)});
    result.transcript.steps.push_back({"measure", "x=" + std::to_string(k)});
    result.output = b[k - 1];
    result.transcript.outcome = result.output;
    result.transcript.steps.push_back({"outcome", std::to_string(result.output)});
    return result;
}

double entropy_capacity(int d_m) {
    if (d_m < 2) {
        throw invalid_input("capacity needs at least two outcomes");
    }
    return std::log2(static_cast<double>(d_m));
}

double mutual_information(const std::vector<std::vector<Rational>>& joint) {
    Rational total = 0;
    for (const auto& row : joint) {
        for (const Rational& p : row) {
            if (p < 0) throw invalid_input("negative probability in joint distribution");
            total += p;
        }
    }
    if (total != 1) {
        throw invalid_input("joint distribution must sum to exactly 1");
    }
    const size_t rows = joint.size();
    const size_t cols = rows == 0 ? 0 : joint[0].size();
    std::vector<Rational> px(rows, 0), py(cols, 0);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            px[i] += joint[i][j];
            py[j] += joint[i][j];
        }
    }
    double mi = 0;
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            if (joint[i][j] == 0) continue;  // 0 log 0 = 0
            Rational ratio = joint[i][j] / (px[i] * py[j]);
            mi += to_double(joint[i][j]) * std::log2(to_double(ratio));
        }
    }
    return mi;
}

IcReport ic_quantity(int n, int cap) {
    if (n < 1) {
        throw invalid_input("information-causality run needs n >= 1");
    }
    if (n > cap) {
        throw cap_exceeded("information-causality n exceeds the enumeration cap");
    }
    IcReport report;
    report.n = n;
    const std::int64_t strings = std::int64_t{1} << n;
    Rational weight(1, Integer(strings));

    for (int j = 1; j <= n; ++j) {
        // Exact joint of (b_j, guess) conditioned on k = j, uniform b.
        std::vector<std::vector<Rational>> joint(2, std::vector<Rational>(2, 0));
        BitString b(n);
        for (std::int64_t code = 0; code < strings; ++code) {
            for (int i = 0; i < n; ++i) b[i] = static_cast<int>((code >> (n - 1 - i)) & 1);
            IndexResult run = index_protocol(b, j);
            joint[b[j - 1]][run.output] += weight;
        }
        report.per_index_bits.push_back(mutual_information(joint));
    }
    for (double v : report.per_index_bits) report.total_bits += v;
    report.capacity_bits = entropy_capacity(2);  // hypercube bits have d_m = 2
    report.violated = report.total_bits > report.capacity_bits;
    return report;
}

CcReport cc_protocol(const TruthTable& table, const CcCaps& caps) {
    if (table.alice_bits > caps.max_alice_bits || table.bob_bits > caps.max_bob_bits) {
        throw cap_exceeded("truth table exceeds configured caps");
    }
    if (static_cast<int>(table.values.size()) != table.rows() * table.cols()) {
        throw invalid_input("truth table has wrong size");
    }
    CcReport report;
    report.alice_bits = table.alice_bits;
    report.bob_bits = table.bob_bits;
    report.dimension = table.cols();  // D = |Y|
    for (int b = 0; b < table.rows(); ++b) {
        // Alice tabulates f(b, .) and prepares the matching vertex.
        BitString zeta(table.cols());
        for (int c = 0; c < table.cols(); ++c) zeta[c] = table.value(b, c);
        for (int c = 0; c < table.cols(); ++c) {
            int output = index_protocol(zeta, c + 1).output;  // Bob measures setting c
            ++report.pairs_total;
            if (output == table.value(b, c)) ++report.pairs_correct;
        }
    }
    report.correct_fraction = Rational(report.pairs_correct, report.pairs_total);
    report.message_bits = entropy_capacity(2);  // one hypercube bit, d_m = 2
    return report;
}

PrBoxSimReport simulate_hypercube_with_prboxes(const BitString& zeta, int k, int cap) {
    const int d = static_cast<int>(zeta.size());
    if (d < 1) {
        throw invalid_input("simulation needs a nonempty state label");
    }
    if (d > cap) {
        throw cap_exceeded("PR-box simulation dimension exceeds the enumeration cap");
    }
    if (k < 1 || k > d) {
        throw invalid_input("index k out of range");
    }
    PrBoxSimReport report;
    report.dimension = d;
    report.k = k;
    report.output_distribution = {Rational(0), Rational(0)};
    report.classical_bits_sent = 1;

    const std::int64_t assignments = std::int64_t{1} << d;
    Rational weight(1, Integer(assignments));
    for (std::int64_t a_code = 0; a_code < assignments; ++a_code) {
        // PR box i: Alice inputs x_i = zeta_i, Bob inputs y_i = [i == k];
        // outputs satisfy a_i xor b_i = x_i y_i with a_i uniform.
        int c = 0;
        int bob_parity = 0;
        for (int i = 0; i < d; ++i) {
            int a_i = static_cast<int>((a_code >> i) & 1);
            int y_i = (i == k - 1) ? 1 : 0;
            int b_i = a_i ^ (zeta[i] & y_i);
            c ^= a_i;
            bob_parity ^= b_i;
        }
        report.output_distribution[c ^ bob_parity] += weight;
    }
    return report;
}

int simulate_prboxes_with_hypercube(const TruthTable& f, const BitString& b,
                                    const BitString& c) {
    if (static_cast<int>(b.size()) != f.alice_bits || static_cast<int>(c.size()) != f.bob_bits) {
        throw invalid_input("input lengths do not match the truth table");
    }
    int b_index = 0;
    for (int bit : b) b_index = (b_index << 1) | bit;
    int c_index = 0;
    for (int bit : c) c_index = (c_index << 1) | bit;

    BitString zeta(f.cols());
    for (int i = 0; i < f.cols(); ++i) zeta[i] = f.value(b_index, i);
    return index_protocol(zeta, c_index + 1).output;
}

}  // namespace boxdim
