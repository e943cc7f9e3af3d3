// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <thread>

#include <nlohmann/json.hpp>

#include "docanno/error.hpp"
#include "docanno/store.hpp"
#include "docanno/synthetic_pdf.hpp"
#include "support/support.hpp"

using namespace docanno;
using namespace docanno::testing;
namespace fs = std::filesystem;

namespace {

struct HookGuard {
    ~HookGuard() { set_fault_hook(nullptr); }
};

struct Project {
    TempDir dir;
    ProjectStore store{dir.path()};
    std::string hash;

    Project() {
        store.set_schema(fixture_schema());
        hash = store.add_document(write_synthetic_pdf({words_page({"alpha beta gamma delta", "epsilon zeta"})}));
        store.assign("ann", {hash});
    }
    const DocumentLayout& layout() { return *store.layout(hash); }
};

AnnotationSet sample_set(const DocumentLayout& doc, const std::string& label = "title") {
    AnnotationSet s;
    s.annotations.push_back(textual(doc, "t1", label, {{0, 0}, {0, 1}}));
    s.annotations.push_back(freeform("f1", 0, {100, 300, 200, 400}, "figure"));
    s.relations.push_back({"r1", "caption-of", {"t1", "f1"}});
    return s;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::Io;
}

}  // namespace

TEST(AddDocument, IdempotentForIdenticalBytes) {
    TempDir dir;
    ProjectStore store(dir.path());
    const std::string pdf = write_synthetic_pdf({words_page({"same bytes"})});
    const std::string a = store.add_document(pdf);
    const std::string b = store.add_document(pdf);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, sha256_hex(pdf));
    EXPECT_EQ(store.documents(), std::vector<std::string>{a});
    EXPECT_EQ(store.pdf_bytes(a), pdf);
    EXPECT_TRUE(fs::exists(dir.path() / a / "structure.json"));
}

TEST(AddDocument, DistinctPdfsDistinctHashes) {
    TempDir dir;
    ProjectStore store(dir.path());
    const auto a = store.add_document(write_synthetic_pdf({words_page({"first"})}));
    const auto b = store.add_document(write_synthetic_pdf({words_page({"second"})}));
    EXPECT_NE(a, b);
    EXPECT_EQ(store.documents().size(), 2u);
}

TEST(AddDocument, TextFileRejected) {
    TempDir dir;
    ProjectStore store(dir.path());
    EXPECT_EQ(code_of([&] { store.add_document("just some text\n"); }), ErrorCode::MalformedPdf);
    EXPECT_TRUE(store.documents().empty());
}

TEST(Sha256, KnownVector) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Assign, IdempotentUnion) {
    TempDir dir;
    ProjectStore store(dir.path());
    std::vector<std::string> hashes;
    for (const char* w : {"one", "two", "three"}) hashes.push_back(store.add_document(write_synthetic_pdf({words_page({w})})));
    EXPECT_EQ(store.assign("ann", hashes).size(), 3u);
    EXPECT_EQ(store.assign("ann", hashes).size(), 3u);
    EXPECT_EQ(store.assign("bob", {hashes[0]}).size(), 1u);
    EXPECT_TRUE(store.is_assigned("ann", hashes[0]));
    EXPECT_TRUE(store.is_assigned("bob", hashes[0]));
    EXPECT_FALSE(store.is_assigned("bob", hashes[1]));
    EXPECT_EQ(store.annotators(), (std::vector<std::string>{"ann", "bob"}));
}

TEST(Assign, UnknownDocumentNamed) {
    TempDir dir;
    ProjectStore store(dir.path());
    const std::string missing(64, 'a');
    try {
        store.assign("ann", {missing});
        FAIL();
    } catch (const UnknownDocumentError& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownDocument);
        EXPECT_EQ(e.hashes(), std::vector<std::string>{missing});
        EXPECT_NE(std::string(e.what()).find(missing), std::string::npos);
    }
    EXPECT_TRUE(store.annotators().empty());
}

TEST(Assign, RejectsBadIdentities) {
    Project p;
    for (const char* bad : {"", "a/b", "..", ".hidden", "__predictions__", "structure", "tab\there"})
        EXPECT_EQ(code_of([&] { p.store.assign(bad, {p.hash}); }), ErrorCode::InvalidIdentity) << bad;
}

TEST(Save, RoundTrip) {
    Project p;
    const auto set = sample_set(p.layout());
    const auto saved = p.store.save_annotations("ann", p.hash, set);
    EXPECT_EQ(saved.revision, 1u);
    EXPECT_EQ(saved.annotations, set);
    EXPECT_EQ(p.store.load_annotations("ann", p.hash), set);
}

TEST(Save, ByteStableAfterCanonicalization) {
    Project p;
    auto set = sample_set(p.layout());
    set.annotations[0].bounds = {0, 0, 1, 1};
    p.store.save_annotations("ann", p.hash, set);
    const fs::path file = p.dir.path() / p.hash / "ann.json";
    const std::string first = slurp(file);
    const auto loaded = p.store.load_annotations("ann", p.hash);
    p.store.save_annotations("ann", p.hash, loaded);
    std::string second = slurp(file);
    // Only the revision differs.
    const auto a = nlohmann::json::parse(first), b = nlohmann::json::parse(second);
    EXPECT_EQ(a["revision"], 1);
    EXPECT_EQ(b["revision"], 2);
    auto strip = [](nlohmann::json j) {
        j.erase("revision");
        return j.dump();
    };
    EXPECT_EQ(strip(a), strip(b));
}

TEST(Save, SnapsTextualBounds) {
    Project p;
    auto set = sample_set(p.layout());
    set.annotations[0].bounds = {1, 2, 3, 4};
    const auto saved = p.store.save_annotations("ann", p.hash, set);
    EXPECT_EQ(saved.annotations.annotations[0].bounds, snap_bounds(p.layout(), *set.annotations[0].tokens));
}

TEST(Save, ValidationFailureKeepsPreviousFile) {
    Project p;
    const auto good = sample_set(p.layout());
    p.store.save_annotations("ann", p.hash, good);
    auto bad = good;
    bad.relations[0].targets = {"t1", "ghost"};
    try {
        p.store.save_annotations("ann", p.hash, bad);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.code(), ErrorCode::ValidationFailed);
        ASSERT_EQ(e.violations().size(), 1u);
        EXPECT_EQ(e.violations()[0].code, "dangling-relation-target");
    }
    EXPECT_EQ(p.store.load_annotations("ann", p.hash), good);
    EXPECT_EQ(p.store.revision("ann", p.hash), 1u);
}

TEST(Save, NotAssigned) {
    Project p;
    EXPECT_EQ(code_of([&] { p.store.save_annotations("eve", p.hash, {}); }), ErrorCode::NotAssigned);
    EXPECT_EQ(code_of([&] { p.store.load_annotations("eve", p.hash); }), ErrorCode::NotAssigned);
    EXPECT_EQ(code_of([&] { p.store.load_annotations("ann", std::string(64, '0')); }), ErrorCode::UnknownDocument);
}

TEST(Save, RevisionsStrictlyIncrease) {
    Project p;
    std::uint64_t last = 0;
    for (int i = 0; i < 20; ++i) {
        const auto r = p.store.save_annotations("ann", p.hash, sample_set(p.layout(), i % 2 ? "title" : "author"));
        EXPECT_GT(r.revision, last);
        EXPECT_EQ(p.store.revision("ann", p.hash), r.revision);
        last = r.revision;
    }
}

TEST(Save, ConcurrentSavesSerialize) {
    Project p;
    const auto a = sample_set(p.layout(), "title");
    const auto b = sample_set(p.layout(), "author");
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] {
            for (int i = 0; i < 10; ++i) p.store.save_annotations("ann", p.hash, t % 2 ? a : b);
        });
    for (auto& th : threads) th.join();
    EXPECT_EQ(p.store.revision("ann", p.hash), 80u);
    const auto loaded = p.store.load_annotations("ann", p.hash);
    EXPECT_TRUE(loaded == a || loaded == b);
}

TEST(Load, Precedence) {
    Project p;
    EXPECT_TRUE(p.store.load_annotations("ann", p.hash).empty());
    AnnotationSet predicted;
    predicted.annotations.push_back(freeform("p1", 0, {10, 10, 60, 60}, "table"));
    const auto result = p.store.prepopulate({{p.hash, nlohmann::json::parse(
                                                          annotation_set_to_json(predicted).dump())}});
    EXPECT_EQ(result.populated, 1u);
    EXPECT_EQ(p.store.load_annotations("ann", p.hash), predicted);
    const auto own = sample_set(p.layout());
    p.store.save_annotations("ann", p.hash, own);
    EXPECT_EQ(p.store.load_annotations("ann", p.hash), own);
    // Predictions never count as a human annotator.
    EXPECT_EQ(p.store.annotators(), std::vector<std::string>{"ann"});
}

TEST(CrashSafety, FaultAtEveryWritePoint) {
    Project p;
    HookGuard guard;
    const auto first = sample_set(p.layout(), "title");
    const auto second = sample_set(p.layout(), "author");
    const fs::path file = p.dir.path() / p.hash / "ann.json";
    for (WritePoint point : {WritePoint::BeforeTempWrite, WritePoint::MidTempWrite, WritePoint::AfterTempWrite,
                             WritePoint::BeforeRename, WritePoint::AfterRename}) {
        p.store.save_annotations("ann", p.hash, first);
        const std::string before = slurp(file);
        set_fault_hook([&](WritePoint at, const fs::path& target) {
            if (at == point && target == file) throw std::runtime_error("injected");
        });
        EXPECT_THROW(p.store.save_annotations("ann", p.hash, second), std::runtime_error);
        set_fault_hook(nullptr);
        const auto loaded = p.store.load_annotations("ann", p.hash);
        if (point == WritePoint::AfterRename) {
            EXPECT_EQ(loaded, second);
        } else {
            EXPECT_EQ(loaded, first);
            EXPECT_EQ(slurp(file), before);
        }
    }
}

TEST(CrashSafety, ProcessKilledMidWrite) {
    Project p;
    const auto first = sample_set(p.layout(), "title");
    const auto second = sample_set(p.layout(), "author");
    const fs::path file = p.dir.path() / p.hash / "ann.json";
    for (int trial = 0; trial < 25; ++trial) {
        p.store.save_annotations("ann", p.hash, first);
        const WritePoint point = static_cast<WritePoint>(trial % 5);
        const pid_t child = ::fork();
        ASSERT_GE(child, 0);
        if (child == 0) {
            set_fault_hook([&](WritePoint at, const fs::path& target) {
                if (at == point && target == file) ::kill(::getpid(), SIGKILL);
            });
            p.store.save_annotations("ann", p.hash, second);
            ::_exit(0);
        }
        int status = 0;
        ::waitpid(child, &status, 0);
        ASSERT_TRUE(WIFSIGNALED(status));
        const auto loaded = p.store.load_annotations("ann", p.hash);
        EXPECT_EQ(loaded, point == WritePoint::AfterRename ? second : first) << "trial " << trial;
    }
}

TEST(Prepopulate, TwoDocuments) {
    Project p;
    const auto other = p.store.add_document(write_synthetic_pdf({words_page({"other doc"})}));
    p.store.assign("bob", {p.hash, other});
    const nlohmann::json box = {{"annotations",
                                 {{{"id", "b"}, {"page", 0}, {"label", "figure"},
                                   {"bounds", {{"left", 1}, {"top", 1}, {"right", 9}, {"bottom", 9}}}}}},
                                {"relations", nlohmann::json::array()}};
    const auto r = p.store.prepopulate({{p.hash, box}, {other, box}});
    EXPECT_EQ(r.populated, 2u);
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(p.store.load_annotations("bob", other).annotations.size(), 1u);
    EXPECT_EQ(p.store.load_annotations("ann", p.hash).annotations.size(), 1u);
}

TEST(Prepopulate, PartialFailure) {
    Project p;
    const auto other = p.store.add_document(write_synthetic_pdf({words_page({"other doc"})}));
    AnnotationSet ok, bad;
    ok.annotations.push_back(freeform("x", 0, {1, 1, 9, 9}, "table"));
    bad.annotations.push_back(freeform("y", 0, {1, 1, 9, 9}, "no-such-label"));
    const auto r = p.store.prepopulate({{p.hash, annotation_set_to_json(bad)},
                                        {other, annotation_set_to_json(ok)},
                                        {std::string(64, 'f'), annotation_set_to_json(ok)}});
    EXPECT_EQ(r.populated, 1u);
    ASSERT_EQ(r.failures.size(), 2u);
    EXPECT_EQ(r.failures[0].document, p.hash);
    EXPECT_FALSE(r.failures[0].violations.empty());
    EXPECT_TRUE(r.failures[1].violations.empty());
    EXPECT_TRUE(p.store.saved_documents(std::string(kPredictionsAnnotator)) == std::vector<std::string>{other});
}

TEST(Prepopulate, BoundsOnlyTextualBoxIsResolvedToTokens) {
    Project p;
    const auto& page = p.layout()[0];
    ASSERT_GE(page.tokens.size(), 4u);
    // Cover tokens 0..2 of the first line and nothing else.
    const Bounds t0 = page.tokens[0].bounds(), t2 = page.tokens[2].bounds();
    const Bounds drag{t0.left + 1, t0.top + 1, t2.right - 1, t2.bottom - 1};
    ASSERT_EQ(select_tokens(page, drag), (std::vector<int>{0, 1, 2}));
    AnnotationSet predicted;
    predicted.annotations.push_back(freeform("p", 0, drag, "title"));
    ASSERT_EQ(p.store.prepopulate({{p.hash, annotation_set_to_json(predicted)}}).populated, 1u);
    const auto stored = p.store.load_annotations("ann", p.hash).annotations.at(0);
    ASSERT_TRUE(stored.tokens.has_value());
    EXPECT_EQ(*stored.tokens, (std::vector<TokenRef>{{0, 0}, {0, 1}, {0, 2}}));
    std::vector<Token> by_hand{page.tokens[0], page.tokens[1], page.tokens[2]};
    EXPECT_EQ(stored.bounds, snap_bounds(by_hand, kDefaultPadding, page.page.size()));
}

TEST(Status, FinishedCounts) {
    Project p;
    EXPECT_EQ(p.store.project_progress().at("ann"), (Progress{0, 0, 1}));
    const auto s = p.store.set_status("ann", p.hash, {true, false, "done", std::nullopt});
    EXPECT_TRUE(s.completed_at.has_value());
    EXPECT_EQ(p.store.status("ann", p.hash), s);
    EXPECT_EQ(p.store.project_progress().at("ann"), (Progress{1, 0, 0}));
    p.store.set_status("ann", p.hash, {false, true, "", std::nullopt});
    EXPECT_EQ(p.store.project_progress().at("ann"), (Progress{0, 1, 0}));
}

TEST(Status, FinishedAndJunkRejected) {
    Project p;
    EXPECT_EQ(code_of([&] { p.store.set_status("ann", p.hash, {true, true, "", std::nullopt}); }),
              ErrorCode::InvalidStatus);
    EXPECT_EQ(code_of([&] { p.store.set_status("eve", p.hash, {}); }), ErrorCode::NotAssigned);
}

TEST(Status, JsonRoundTrip) {
    const Status s{true, false, "note", "2026-01-02T03:04:05Z"};
    EXPECT_EQ(status_from_json(status_to_json(s)), s);
    EXPECT_EQ(code_of([] { status_from_json(nlohmann::json{{"finished", "yes"}}); }), ErrorCode::InvalidFormat);
}

TEST(Schema, PersistsAcrossInstances) {
    TempDir dir;
    {
        ProjectStore store(dir.path());
        EXPECT_EQ(store.schema(), LabelSchema{});
        store.set_schema(fixture_schema());
    }
    ProjectStore reopened(dir.path());
    EXPECT_EQ(reopened.schema(), fixture_schema());
}
