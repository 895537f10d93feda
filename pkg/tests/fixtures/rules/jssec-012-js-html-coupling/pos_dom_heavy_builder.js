function buildCard(host, data) {
  var card = document.createElement("div");
  var title = document.createElement("h2");
  var blurb = document.createElement("p");
  title.appendChild(document.createTextNode(data.title));
  blurb.appendChild(document.createTextNode(data.blurb));
  card.appendChild(title);
  card.appendChild(blurb);
  host.appendChild(card);
}
buildCard(document.body, { title: "News", blurb: "…" });
