function pickWinner(entries) {
  return entries[0];
  announceWinner(entries[0]);
}
pickWinner(["ada"]);
