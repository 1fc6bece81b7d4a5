// Regenerates data/groups and data/codes from the in-tree constructions.
#include <filesystem>
#include <iostream>

#include "ctc/code_io.hpp"
#include "ctc/groups.hpp"
#include "ctc/zoo.hpp"

namespace fs = std::filesystem;
using namespace ctc;

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : default_data_dir();
    try {
        fs::create_directories(fs::path(dir) / "groups");
        fs::create_directories(fs::path(dir) / "codes");
        for (const auto& spec : group_specs()) {
            GroupGens g = builtin_group(spec.name);
            g.claimed_order = spec.order;
            check_preserves_set(g, spec.preserves);
            std::string comment = "generated by gen_data from the construction of " + spec.name;
            write_text_file((fs::path(dir) / "groups" / (spec.name + ".perms")).string(),
                            format_group(g, spec.preserves, comment));
            std::cout << "groups/" << spec.name << ".perms  " << g.gens.size() << " generators\n";
        }
        for (const auto& name : code_names()) {
            write_text_file((fs::path(dir) / "codes" / (name + ".code")).string(), format_code(named_code(name).code));
            std::cout << "codes/" << name << ".code\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "gen_data: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
