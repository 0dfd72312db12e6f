import java.util.ArrayList;
import java.util.Scanner;

public class Counter113 {
  public static double computeBmi(double weight, double height) {
    double value = weight / Math.pow(height, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static int digitSum(int num) {
    int result = 0;
    while (num > 0) {
      result += num % 10;
      num /= 10;
    }
    return result;
  }

  public static int sumArray(int[] data) {
    int result = 0;
    for (int i = 0; i < data.length; i++) {
      result += data[i];
    }
    return result;
  }

  static int fib(int num) {
    int first = 0;
    int second = 1;
    for (int i = 0; i < num; i++) {
      int next = first + second;
      first = second;
      second = next;
    }
    return first;
  }

  public static String reverse(String input) {
    StringBuilder sb = new StringBuilder();
    for (int i = input.length() - 1; i >= 0; i--) {
      sb.append(input.charAt(i));
    }
    return sb.toString();
  }

  static ArrayList<Integer> filterEven(int[] data) {
    ArrayList<Integer> list = new ArrayList<>();
    for (int v : data) {
      if (v % 2 == 0) {
        list.add(v);
      }
    }
    return list;
  }

  static int greatestDivisor(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {3, 7, 4, 1, 9, 3, 2};
    System.out.println("BMI: " + computeBmi(89.5, 1.75));
    System.out.println("Digits: " + digitSum(90584));
    System.out.println("Sum: " + sumArray(numbers));
    System.out.println("Fib: " + fib(18));
    String rev = reverse("stressed");
    System.out.println(rev);
    ArrayList<Integer> even = filterEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println("GCD: " + greatestDivisor(20, 47));
    sc.close();
  }
}
