#include "catcheck/simplicial/nerve.hpp"

#include "catcheck/error.hpp"

namespace catcheck {

  Nerve nerve(FiniteCategory const& c, std::size_t dim) {
    std::vector<std::vector<std::vector<std::size_t>>>           chains(dim + 1);
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(dim + 1);
    std::vector<std::vector<std::string>> labels(dim + 1);
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      chains[0].push_back({x});
      labels[0].push_back(c.object_label(x));
    }
    for (std::size_t f = 0; dim >= 1 && f < c.morphism_count(); ++f) {
      chains[1].push_back({f});
      labels[1].push_back(c.arrow(f).label);
    }
    for (std::size_t k = 2; k <= dim; ++k) {
      for (std::size_t s = 0; s < chains[k - 1].size(); ++s) {
        auto const& prev = chains[k - 1][s];
        for (auto g : c.out(c.codomain(prev.back()))) {
          auto next = prev;
          next.push_back(g);
          chains[k].push_back(std::move(next));
          labels[k].push_back(labels[k - 1][s] + ";" + c.arrow(g).label);
        }
      }
    }
    for (std::size_t k = 0; k <= dim; ++k) {
      for (std::size_t s = 0; s < chains[k].size(); ++s) {
        index[k].emplace(chains[k][s], s);
      }
    }

    auto source_object = [&](std::size_t k, std::size_t s) {
      return k == 0 ? chains[0][s][0] : c.domain(chains[k][s][0]);
    };

    TruncatedSimplicialSet::Tables faces(dim + 1), degen(dim + 1);
    std::vector<std::size_t>       sizes;
    for (std::size_t k = 0; k <= dim; ++k) {
      sizes.push_back(chains[k].size());
      for (std::size_t i = 0; k > 0 && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (auto const& ch : chains[k]) {
          std::vector<std::size_t> face;
          if (k == 1) {
            face = {i == 0 ? c.codomain(ch[0]) : c.domain(ch[0])};
          } else if (i == 0) {
            face.assign(ch.begin() + 1, ch.end());
          } else if (i == k) {
            face.assign(ch.begin(), ch.end() - 1);
          } else {
            face = ch;
            face[i - 1] = c.compose(ch[i], ch[i - 1]);
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          }
          t.push_back(index[k - 1].at(face));
        }
        faces[k].push_back(std::move(t));
      }
      for (std::size_t i = 0; k < dim && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (std::size_t s = 0; s < chains[k].size(); ++s) {
          auto const&              ch = chains[k][s];
          std::vector<std::size_t> up;
          if (k == 0) {
            up = {c.identity(ch[0])};
          } else {
            // Object x_i of the chain: the source for i = 0, else the
            // target of f_i.
            auto const x = i == 0 ? source_object(k, s) : c.codomain(ch[i - 1]);
            up           = ch;
            up.insert(up.begin() + static_cast<std::ptrdiff_t>(i), c.identity(x));
          }
          t.push_back(index[k + 1].at(up));
        }
        degen[k].push_back(std::move(t));
      }
    }
    return {TruncatedSimplicialSet(std::move(sizes), std::move(faces), std::move(degen),
                                   std::move(labels)),
            std::move(chains), std::move(index)};
  }

  SimplicialMap nerve_map(Nerve const&                    source,
                          Nerve const&                    target,
                          std::vector<std::size_t> const& on_objects,
                          std::vector<std::size_t> const& on_morphisms) {
    SimplicialMap f;
    auto const    D = std::min(source.chains.size(), target.chains.size());
    for (std::size_t k = 0; k < D; ++k) {
      std::vector<std::size_t> level;
      for (auto const& ch : source.chains[k]) {
        std::vector<std::size_t> image;
        for (auto v : ch) {
          image.push_back(k == 0 ? on_objects.at(v) : on_morphisms.at(v));
        }
        auto it = target.index[k].find(image);
        if (it == target.index[k].end()) {
          throw Error("functor image of a chain is not composable in the target");
        }
        level.push_back(it->second);
      }
      f.levels.push_back(std::move(level));
    }
    return f;
  }

}  // namespace catcheck
