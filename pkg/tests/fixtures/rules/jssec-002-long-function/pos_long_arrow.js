const renderDashboard = (model, render) => {
  const rows = [];
  rows.push(render(model.section00));
  rows.push(render(model.section01));
  rows.push(render(model.section02));
  rows.push(render(model.section03));
  rows.push(render(model.section04));
  rows.push(render(model.section05));
  rows.push(render(model.section06));
  rows.push(render(model.section07));
  rows.push(render(model.section08));
  rows.push(render(model.section09));
  rows.push(render(model.section10));
  rows.push(render(model.section11));
  rows.push(render(model.section12));
  rows.push(render(model.section13));
  rows.push(render(model.section14));
  rows.push(render(model.section15));
  rows.push(render(model.section16));
  rows.push(render(model.section17));
  rows.push(render(model.section18));
  rows.push(render(model.section19));
  rows.push(render(model.section20));
  rows.push(render(model.section21));
  rows.push(render(model.section22));
  rows.push(render(model.section23));
  rows.push(render(model.section24));
  rows.push(render(model.section25));
  rows.push(render(model.section26));
  rows.push(render(model.section27));
  rows.push(render(model.section28));
  rows.push(render(model.section29));
  rows.push(render(model.section30));
  rows.push(render(model.section31));
  rows.push(render(model.section32));
  rows.push(render(model.section33));
  rows.push(render(model.section34));
  rows.push(render(model.section35));
  rows.push(render(model.section36));
  rows.push(render(model.section37));
  rows.push(render(model.section38));
  rows.push(render(model.section39));
  rows.push(render(model.section40));
  rows.push(render(model.section41));
  rows.push(render(model.section42));
  rows.push(render(model.section43));
  rows.push(render(model.section44));
  rows.push(render(model.section45));
  rows.push(render(model.section46));
  rows.push(render(model.section47));
  rows.push(render(model.section48));
  rows.push(render(model.section49));
  return rows.join("\n");
};
renderDashboard({}, String);
