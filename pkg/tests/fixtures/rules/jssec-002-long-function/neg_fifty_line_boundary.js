function sumFixedTerms(terms) {
  var acc = 0;
  acc = acc + terms[0];
  acc = acc + terms[1];
  acc = acc + terms[2];
  acc = acc + terms[3];
  acc = acc + terms[4];
  acc = acc + terms[5];
  acc = acc + terms[6];
  acc = acc + terms[7];
  acc = acc + terms[8];
  acc = acc + terms[9];
  acc = acc + terms[10];
  acc = acc + terms[11];
  acc = acc + terms[12];
  acc = acc + terms[13];
  acc = acc + terms[14];
  acc = acc + terms[15];
  acc = acc + terms[16];
  acc = acc + terms[17];
  acc = acc + terms[18];
  acc = acc + terms[19];
  acc = acc + terms[20];
  acc = acc + terms[21];
  acc = acc + terms[22];
  acc = acc + terms[23];
  acc = acc + terms[24];
  acc = acc + terms[25];
  acc = acc + terms[26];
  acc = acc + terms[27];
  acc = acc + terms[28];
  acc = acc + terms[29];
  acc = acc + terms[30];
  acc = acc + terms[31];
  acc = acc + terms[32];
  acc = acc + terms[33];
  acc = acc + terms[34];
  acc = acc + terms[35];
  acc = acc + terms[36];
  acc = acc + terms[37];
  acc = acc + terms[38];
  acc = acc + terms[39];
  acc = acc + terms[40];
  acc = acc + terms[41];
  acc = acc + terms[42];
  acc = acc + terms[43];
  acc = acc + terms[44];
  acc = acc + terms[45];
  return acc;
}
sumFixedTerms([]);
