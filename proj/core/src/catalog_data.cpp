#include "internal_catalog.hpp"

namespace crystden::internal {

// The 17 wallpaper groups in standard primitive settings: lattice basis
// translations plus one affine representative per point-group generator.
// Hexagonal entries use the crystallographic basis, where the order-6
// rotation is [[1,-1],[1,0]].
const char* catalog_json() {
  return R"json([
{"name":"p1","expected_density":"0","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]}]},
{"name":"p2","expected_density":"1/2","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[-1,0,0,-1],"translation":["0","0"]}]},
{"name":"pm","expected_density":"0","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[1,0,0,-1],"translation":["0","0"]}]},
{"name":"pg","expected_density":"0","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[1,0,0,-1],"translation":["1/2","0"]}]},
{"name":"cm","expected_density":"0","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[0,1,1,0],"translation":["0","0"]}]},
{"name":"pmm","expected_density":"1/4","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[1,0,0,-1],"translation":["0","0"]},
  {"linear":[-1,0,0,1],"translation":["0","0"]}]},
{"name":"pmg","expected_density":"1/4","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[-1,0,0,-1],"translation":["0","0"]},
  {"linear":[1,0,0,-1],"translation":["1/2","0"]}]},
{"name":"pgg","expected_density":"1/4","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[1,0,0,-1],"translation":["1/2","1/2"]},
  {"linear":[-1,0,0,1],"translation":["1/2","1/2"]}]},
{"name":"cmm","expected_density":"1/4","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[0,1,1,0],"translation":["0","0"]},
  {"linear":[0,-1,-1,0],"translation":["0","0"]}]},
{"name":"p4","expected_density":"3/4","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[0,-1,1,0],"translation":["0","0"]}]},
{"name":"p4m","expected_density":"3/8","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[0,-1,1,0],"translation":["0","0"]},
  {"linear":[1,0,0,-1],"translation":["0","0"]}]},
{"name":"p4g","expected_density":"3/8","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[0,-1,1,0],"translation":["0","0"]},
  {"linear":[1,0,0,-1],"translation":["1/2","1/2"]}]},
{"name":"p3","expected_density":"2/3","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[0,-1,1,-1],"translation":["0","0"]}]},
{"name":"p3m1","expected_density":"1/3","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[0,-1,1,-1],"translation":["0","0"]},
  {"linear":[0,-1,-1,0],"translation":["0","0"]}]},
{"name":"p31m","expected_density":"1/3","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[0,-1,1,-1],"translation":["0","0"]},
  {"linear":[0,1,1,0],"translation":["0","0"]}]},
{"name":"p6","expected_density":"5/6","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[1,-1,1,0],"translation":["0","0"]}]},
{"name":"p6m","expected_density":"5/12","dim":2,"generators":[
  {"linear":[1,0,0,1],"translation":["1","0"]},
  {"linear":[1,0,0,1],"translation":["0","1"]},
  {"linear":[1,-1,1,0],"translation":["0","0"]},
  {"linear":[0,1,1,0],"translation":["0","0"]}]}
])json";
}

}  // namespace crystden::internal
