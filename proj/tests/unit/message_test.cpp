#include <gtest/gtest.h>

#include "dynlist/message.hpp"

using namespace dynlist;

TEST(MessageBits, EdgeUpdate) {
  Message m;
  m.item = EdgeUpdate{Edge(0, 1), ChangeKind::Insert};
  EXPECT_EQ(message_bits(m, 16), kHeaderBits + 2 * 4 + 1);
  EXPECT_LE(message_bits(m, 16), default_bandwidth(16));
  m.item = PairUpdate{Edge(0, 1), ChangeKind::Delete};
  EXPECT_EQ(message_bits(m, 16), kHeaderBits + 2 * 4 + 1);
}

TEST(MessageBits, Paths) {
  Message m;
  m.item = PathInsert{Path{0, 1, 2}};
  EXPECT_EQ(message_bits(m, 256), kHeaderBits + 3 * 8 + 2);
  EXPECT_LE(message_bits(m, 256), default_bandwidth(256));
  m.item = PathDelete{Path{0, 1}};
  EXPECT_EQ(message_bits(m, 256), kHeaderBits + 2 * 8 + 2);
}

TEST(MessageBits, FlagsOnlyAndSnapshot) {
  Message m;
  m.is_empty = false;
  EXPECT_EQ(message_bits(m, 16), kHeaderBits);
  EXPECT_FALSE(m.trivial());
  EXPECT_TRUE(Message{}.trivial());
  m.item = SnapshotChunk{3, 0, std::vector<bool>(4, true)};
  // payload B plus header: tag and flags, owner id, first-chunk bit
  EXPECT_EQ(message_bits(m, 16), 4 + kHeaderBits + 4 + 1);
  EXPECT_LE(message_bits(m, 16), naive_bandwidth(16, 4));
}

TEST(Path, Operations) {
  const Path p{1, 2, 3};
  EXPECT_EQ(p.node_count(), 3u);
  EXPECT_EQ(p.edge_count(), 2u);
  EXPECT_EQ(p.last_edge(), Edge(2, 3));
  EXPECT_TRUE(p.contains_edge(Edge(2, 1)));
  EXPECT_FALSE(p.contains_edge(Edge(1, 3)));
  EXPECT_EQ(p.prepend(0), (Path{0, 1, 2, 3}));
  EXPECT_FALSE(p.prepend(2).has_value());
  EXPECT_FALSE((Path{0, 1, 2, 3}).prepend(4).has_value());
  EXPECT_EQ(p.prefix(1), (Path{1, 2}));
  EXPECT_TRUE(p.starts_with(Path{1, 2}));
  EXPECT_FALSE(p.starts_with(Path{2, 3}));
  EXPECT_TRUE((Path{1, 2} < p));
}
